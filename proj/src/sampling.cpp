#include "octlin/sampling.hpp"

#include <vector>

namespace octlin {

Scalar random_scalar(Rng& rng, const Field& f, long long bound) {
    if (f.is_prime_field())
        return Scalar::integer(static_cast<long long>(rng.below(
                                   static_cast<std::uint64_t>(f.prime()))),
                               f);
    long long num = rng.in_range(-bound, bound);
    long long den = rng.in_range(1, bound);
    return Scalar::fraction(num, den);
}

Scalar random_nonzero_scalar(Rng& rng, const Field& f, long long bound) {
    for (;;) {
        Scalar s = random_scalar(rng, f, bound);
        if (!s.is_zero()) return s;
    }
}

Octonion random_octonion(Rng& rng, const Field& f, long long bound) {
    std::array<Scalar, 8> c{};
    for (auto& s : c) s = random_scalar(rng, f, bound);
    return Octonion::from_coords(c);
}

Octonion random_nonzero_octonion(Rng& rng, const Field& f, long long bound) {
    for (;;) {
        Octonion a = random_octonion(rng, f, bound);
        if (!a.is_zero()) return a;
    }
}

Octonion random_invertible_octonion(Rng& rng, const Field& f, long long bound) {
    for (;;) {
        Octonion a = random_octonion(rng, f, bound);
        if (!a.norm().is_zero()) return a;
    }
}

Octonion random_zero_norm_octonion(Rng& rng, const Field& f, long long bound) {
    for (;;) {
        Scalar alpha = random_scalar(rng, f, bound);
        Vec3 u{{random_scalar(rng, f, bound), random_scalar(rng, f, bound),
                random_scalar(rng, f, bound)}};
        if (!alpha.is_zero()) {
            Vec3 v{{random_scalar(rng, f, bound), random_scalar(rng, f, bound),
                    random_scalar(rng, f, bound)}};
            Octonion a(alpha, u, v, dot(u, v) / alpha);
            if (!a.is_zero()) return a;
        } else {
            // u.v = 0 by taking v orthogonal to u.
            Vec3 w{{random_scalar(rng, f, bound), random_scalar(rng, f, bound),
                    random_scalar(rng, f, bound)}};
            Octonion a(alpha, u, cross(u, w), random_scalar(rng, f, bound));
            if (!a.is_zero()) return a;
        }
    }
}

SL3 random_sl3(Rng& rng, const Field& f, int moves, long long bound) {
    SL3 g = SL3::identity(f);
    for (int m = 0; m < moves; ++m) {
        if (rng.below(4) == 0) {
            Scalar t = random_nonzero_scalar(rng, f, bound);
            g = g * SL3::diag(t, Scalar::one(f), t.inverse());
        } else {
            int i = static_cast<int>(rng.below(3));
            int j = static_cast<int>(rng.below(3));
            if (i == j) j = (j + 1) % 3;
            std::array<Scalar, 9> e{};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    e[static_cast<std::size_t>(r * 3 + c)] =
                        r == c ? Scalar::one(f) : Scalar::zero(f);
            e[static_cast<std::size_t>(i * 3 + j)] = random_scalar(rng, f, bound);
            g = g * SL3(e);
        }
    }
    return g;
}

namespace {

// Random parenthesization with `leaves` leaf slots; the leaf at position
// `var_at` becomes the variable.
MonomialTree build_shape(Rng& rng, int leaves, int var_at, int& next_leaf, int& next_name,
                         const std::function<Octonion(Rng&)>& draw) {
    if (leaves == 1) {
        int at = next_leaf++;
        if (at == var_at) return MonomialTree::variable();
        return MonomialTree::constant("a" + std::to_string(++next_name), draw(rng));
    }
    int left = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(leaves - 1)));
    MonomialTree l = build_shape(rng, left, var_at, next_leaf, next_name, draw);
    MonomialTree r = build_shape(rng, leaves - left, var_at, next_leaf, next_name, draw);
    return MonomialTree::product(std::move(l), std::move(r));
}

} // namespace

MonomialTree random_monomial_tree(Rng& rng, int num_constants,
                                  const std::function<Octonion(Rng&)>& draw_constant) {
    int leaves = num_constants + 1;
    int var_at = static_cast<int>(rng.below(static_cast<std::uint64_t>(leaves)));
    int next_leaf = 0, next_name = 0;
    return build_shape(rng, leaves, var_at, next_leaf, next_name, draw_constant);
}

} // namespace octlin
