#pragma once

// Exact solvers for the one-variable equations a*x = c, x*a = c, (a*x)*b = c,
// a*(b*x) = c and general monomial equations, together with the invariant
// classification of the solution set (unique / empty / flat of predicted
// dimension / whole space). The classification is computed from norms and
// annihilation products and is cross-checked against the computed flat.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "octlin/flats.hpp"
#include "octlin/monomial.hpp"

namespace octlin {

struct Classification {
    // "unique", "empty", "flat:4", "flat:{5,7}", "flat:{4,6,8}|empty|whole_space", ...
    std::string predicted_case;
    // Dimensions the invariants admit (-1 encodes empty, 0 a point, 8 all).
    std::set<int> admissible_dims;
    // Invariant values the prediction used, as printable strings.
    std::map<std::string, std::string> witnesses;
    // The computed dimension and whether it agrees with the prediction.
    int computed_dim = -1;
    bool consistent = false;
};

struct SolveResult {
    AffineFlat flat;
    Classification classification;
};

// a*x = c; unique iff n(a) != 0, a 4-flat iff n(a) = 0 and conj(a)*c = 0,
// empty otherwise. Throws ZeroCoefficient for a = 0.
SolveResult solve_ax(const Octonion& a, const Octonion& c);

// x*a = c via the involution (solve conj(a)*z = conj(c), map back), cross-
// checked against the right-multiplication operator.
SolveResult solve_xa(const Octonion& a, const Octonion& c);

// (a*x)*b = c.
SolveResult solve_axb(const Octonion& a, const Octonion& b, const Octonion& c);

// a*(b*x) = c; includes the whole-space case b = xi*conj(a), n(a) = 0, c = 0.
SolveResult solve_abx(const Octonion& a, const Octonion& b, const Octonion& c);

// General monomial equation w(x) = c.
SolveResult solve_monomial(const MonomialTree& w, const Octonion& c);

enum class PairShape { AXB, ABX };

// The annihilation condition that any solvable instance with zero-norm a, b
// must satisfy: c*conj(b) = 0 for (a*x)*b = c, conj(a)*c = 0 for a*(b*x) = c.
// True does not imply solvability.
bool necessary_conditions(PairShape shape, const Octonion& a, const Octonion& b,
                          const Octonion& c);

struct Equation {
    MonomialTree tree;
    Octonion rhs;
};

struct DegenerationReport {
    struct Conclusion {
        std::string name;
        bool applicable;
        bool holds;
        std::string detail;
    };
    std::vector<Conclusion> conclusions;
    int dim_original = -1;
    int dim_degenerate = -1;
    bool all_hold = true; // over the applicable conclusions
};

// Checks the dimension consequences a certified degeneration must satisfy:
// (a) uniqueness equivalence, (b) equal dimension for a*x = c,
// (c) dim-4 equivalence for (a*x)*b = c, (d) whole-space equivalence for
// a*(b*x) = c. A violated conclusion certifies that `degenerate` is not a
// degeneration of `original`. Throws ShapeMismatch / NormMismatch when the
// preconditions fail.
DegenerationReport degeneration_consequences(const Equation& original,
                                             const Equation& degenerate);

} // namespace octlin
