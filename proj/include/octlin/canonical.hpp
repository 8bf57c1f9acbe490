#pragma once

// Canonical representatives and closed-form solution families.
//
//  - single-octonion orbit representatives (scalar family, ordered diagonal
//    family, unipotent family) and the zero-norm representatives
//    {0, alpha1*e1, u1};
//  - the fifteen representative cases (0)-(XIV) for pairs of zero-norm
//    octonions;
//  - coordinate-pattern membership tests for the named sets D, E, F, K, L,
//    M, N, P and their decorated variants (this is literal pattern matching,
//    not orbit classification);
//  - executable solution families for (a*x)*b = c and a*(b*x) = c over the
//    canonical pairs: given gamma parameters they emit the admissible right
//    side and the solution flat, and a verifier replays them against the
//    solver.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "octlin/flats.hpp"
#include "octlin/octonion.hpp"
#include "octlin/rng.hpp"

namespace octlin {

// ---------------------------------------------------------------- singles

enum class SingleFamily { E, Fbar, K1 };

// E: alpha1 * 1; Fbar: diag(alpha1, alpha8) with alpha1 < alpha8 in the
// tie-break order; K1: diag(alpha1, alpha1) + u1.
Octonion make_canonical_single(SingleFamily family, const Scalar& alpha1,
                               const std::optional<Scalar>& alpha8 = std::nullopt);

enum class ZeroNormRep { Zero, ScalarE1, U1 };

Octonion make_zero_norm_rep(ZeroNormRep rep, const Field& f,
                            const std::optional<Scalar>& alpha1 = std::nullopt);

// Every named coordinate-pattern family the octonion matches, with
// decorations: plain, 0 (traceless), bar (alpha1 <= alpha8), 1
// (alpha1 = alpha8), T (transpose matches), 0T, 1T. Tags look like
// "M", "M0", "Mbar", "M1", "MT", "M0T", "M1T".
std::set<std::string> classify_membership(const Octonion& a);

// ------------------------------------------------------------------ pairs

enum class PairCase { C0, CI, CII, CIII, CIV, CV, CVI, CVII, CVIII, CIX, CX, CXI, CXII, CXIII, CXIV };

std::string pair_case_name(PairCase c); // "0", "I", ..., "XIV"

struct PairParams {
    std::optional<Scalar> alpha1;
    std::optional<Scalar> beta1;
    std::optional<Scalar> beta2;
    std::optional<Scalar> beta5;
    std::optional<Scalar> beta8;
};

// The representative pair for the case; validates the case constraints and
// throws ParameterViolation when they fail. Both components have zero norm.
std::pair<Octonion, Octonion> make_pair(PairCase c, const PairParams& params, const Field& f);

// All cases whose literal pattern (coordinates + constraints) the pair
// matches.
std::vector<PairCase> classify_pair(const Octonion& a, const Octonion& b);

// -------------------------------------------------------- solution families

// Affine expression in the gamma parameters and the free solution variables:
// constant + sum coeff_g[i]*gamma_i + sum coeff_x[i]*x_i (indices 1..8).
struct AffExpr {
    Scalar constant;
    std::map<int, Scalar> gamma_coeff;
    std::map<int, Scalar> x_coeff;

    static AffExpr value(const Scalar& s) { return {s, {}, {}}; }
    static AffExpr zero(const Field& f) { return value(Scalar::zero(f)); }
    static AffExpr gamma(int i, const Scalar& coeff);
    static AffExpr freevar(int i, const Scalar& coeff);

    AffExpr operator+(const AffExpr& o) const;
    AffExpr operator-(const AffExpr& o) const;
    AffExpr operator-() const;
    AffExpr scaled(const Scalar& s) const;

    Scalar eval(const std::map<int, Scalar>& gammas, const std::map<int, Scalar>& xs) const;
};

enum class Theorem { AXB, ABX };

// One closed-form case: the canonical pair, the admissible right sides
// parameterized by the gammas, and the solution coordinates parameterized by
// the gammas and the free variables.
struct SolutionFamily {
    Theorem theorem;
    std::string case_id; // "V.1", ..., "XIV"
    Octonion a, b;
    std::array<AffExpr, 8> c_expr;
    std::array<AffExpr, 8> x_expr;
    std::vector<int> gamma_indices; // gammas appearing, ascending
    std::vector<int> free_indices;  // free x_i, ascending

    Octonion c_of(const std::map<int, Scalar>& gammas) const;
    AffineFlat solution_of(const std::map<int, Scalar>& gammas) const;
    // Right sides admitting a solution, as a flat in c-space.
    AffineFlat admissible_c() const;
    Octonion eval_equation(const Octonion& x) const; // (a*x)*b or a*(b*x)
};

// All case identifiers of one theorem, in table order.
std::vector<std::string> family_case_ids(Theorem thm);

// Build the family for a case; validates the per-case parameter constraints.
SolutionFamily make_family(Theorem thm, const std::string& case_id, const PairParams& params,
                           const Field& f);

inline SolutionFamily family_AXB(const std::string& case_id, const PairParams& p, const Field& f) {
    return make_family(Theorem::AXB, case_id, p, f);
}
inline SolutionFamily family_ABX(const std::string& case_id, const PairParams& p, const Field& f) {
    return make_family(Theorem::ABX, case_id, p, f);
}

// Draw admissible random parameters for a case (nonzero where the case
// demands, unrestricted otherwise).
PairParams draw_family_params(Theorem thm, const std::string& case_id, Rng& rng, const Field& f);

struct TrialRecord {
    std::uint64_t trial;
    bool ok;
    std::string witness; // empty when ok
};

struct VerifyReport {
    Theorem theorem;
    std::string case_id;
    int trials = 0;
    int violations = 0;
    std::vector<TrialRecord> records;
};

// Replays the family `trials` times with seeded random gammas (and random
// solution-flat members): the stated solution must substitute back to the
// stated c, the solver flat must equal the family flat, the dimension must
// equal the free-variable count, and membership in the admissible-c flat
// must match solvability for an unrestricted random c. Trials may run
// concurrently; records are aggregated in trial order.
VerifyReport verify_family(const SolutionFamily& f, int trials, std::uint64_t seed);

// Per-trial fresh parameters and gammas for one case.
VerifyReport verify_case(Theorem thm, const std::string& case_id, int trials, std::uint64_t seed,
                         const Field& f);

} // namespace octlin
