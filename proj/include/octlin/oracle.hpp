#pragma once

// Brute force over Fp^8 (p in {2,3,5}): enumerate every octonion, evaluate
// the monomial tree directly by nested products, and compare against the
// solver's flat pointwise. This is the independent ground truth for the
// solver and the closed-form families; it never touches the operator /
// elimination route. The inner loops run on plain machine integers mod p;
// tests pin that arithmetic against the exact Scalar implementation.
//
// A plain serial loop is kept as the reference; the parallel version chunks
// the index range (fixed chunk count, merged in order) so its output is
// bit-identical to the serial one for any thread count.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octlin/flats.hpp"
#include "octlin/monomial.hpp"

namespace octlin {

struct EnumerationResult {
    int p = 3;
    std::string equation;
    std::uint64_t solution_count = 0;
    // Lexicographically first solutions (coordinate representatives 0..p-1),
    // capped at 16.
    std::vector<std::array<int, 8>> samples;
    std::optional<bool> matches_flat;

    bool operator==(const EnumerationResult&) const = default;
};

// Throws FieldTooLarge unless p is 2, 3 or 5; c and the tree constants must
// live in Fp.
EnumerationResult enumerate_solutions_serial(const MonomialTree& w, const Octonion& c, int p);
EnumerationResult enumerate_solutions(const MonomialTree& w, const Octonion& c, int p);

struct OracleComparison {
    EnumerationResult enumeration;
    int flat_dim = -1;
    bool match = false;
    // First point (in lexicographic order) where direct evaluation and flat
    // membership disagree.
    std::optional<std::array<int, 8>> first_discrepancy;
};

// Solves with the solver, then walks all of Fp^8 comparing tree evaluation
// against flat membership; match also requires the count to equal p^dim
// (or 0 for the empty flat).
OracleComparison compare_with_solver(const MonomialTree& w, const Octonion& c, int p);

// Same pointwise walk against a caller-supplied flat (used to show tampered
// flats are caught).
OracleComparison compare_with_flat(const MonomialTree& w, const Octonion& c, int p,
                                   const AffineFlat& flat);

} // namespace octlin
