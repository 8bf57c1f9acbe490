#pragma once

// Seeded random draws of scalars, octonions (generic / invertible / zero
// norm), unimodular matrices, and monomial trees. Everything is driven by
// the splitmix64 Rng so identical seeds reproduce identical objects.

#include <functional>

#include "octlin/g2.hpp"
#include "octlin/monomial.hpp"
#include "octlin/octonion.hpp"
#include "octlin/rng.hpp"

namespace octlin {

// On the rationals: numerator in [-bound, bound], denominator in [1, bound].
Scalar random_scalar(Rng& rng, const Field& f, long long bound = 20);
Scalar random_nonzero_scalar(Rng& rng, const Field& f, long long bound = 20);

Octonion random_octonion(Rng& rng, const Field& f, long long bound = 20);
Octonion random_nonzero_octonion(Rng& rng, const Field& f, long long bound = 20);
// Rejection sampling on the norm.
Octonion random_invertible_octonion(Rng& rng, const Field& f, long long bound = 20);
// Constructive: solves for the last diagonal entry (or takes v in the
// orthogonal complement of u), always nonzero with zero norm.
Octonion random_zero_norm_octonion(Rng& rng, const Field& f, long long bound = 20);

// Product of random shear and diag(t,1,1/t) moves.
SL3 random_sl3(Rng& rng, const Field& f, int moves = 4, long long bound = 5);

// Random fully parenthesized shape with `num_constants` constant leaves
// (named a1, a2, ... in-order) and the variable at a random leaf; constants
// come from the supplied generator.
MonomialTree random_monomial_tree(Rng& rng, int num_constants,
                                  const std::function<Octonion(Rng&)>& draw_constant);

} // namespace octlin
