#pragma once

// The SL3 block of the automorphism group of the split octonions: a
// unimodular A acts by (alpha, u, v, beta) -> (alpha, A u, A^{-T} v, beta).
// This fragment is enough to generate nontrivial orbit moves, and the fixed
// one-parameter subgroup diag(t, 1, 1/t) supplies certified degenerations
// via its t -> 0 limit.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octlin/linop.hpp"
#include "octlin/octonion.hpp"

namespace octlin {

class SL3 {
  public:
    // Row-major entries; throws NotUnimodular unless det = 1.
    explicit SL3(const std::array<Scalar, 9>& entries);

    static SL3 identity(const Field& f);
    static SL3 diag(const Scalar& t1, const Scalar& t2, const Scalar& t3);
    // "a,b,c;d,e,f;g,h,i" with scalar literals.
    static SL3 parse(const std::string& text, const Field& f);

    const Field& field() const { return entries_[0].field(); }
    const Scalar& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row * 3 + col)];
    }

    SL3 operator*(const SL3& o) const;
    Octonion act(const Octonion& a) const;
    LinOp8 as_linop() const;

  private:
    std::array<Scalar, 9> entries_;
    std::array<Scalar, 9> inv_transpose_; // cached for the v slot
};

// t -> 0 limit of diag(t, 1, 1/t) applied to every octonion in the tuple.
// The limit exists iff each member has zero u3 and v1 coordinates; it zeroes
// u1 and v3 and keeps the rest. Returns nullopt when some coordinate
// diverges.
std::optional<std::vector<Octonion>> torus_limit(const std::vector<Octonion>& tuple);

// A certified degeneration record: the limit is in the orbit closure of the
// base tuple.
struct DegenerationCurve {
    std::vector<Octonion> base;
    std::vector<Octonion> limit;
    std::string description; // e.g. "diag(t,1,1/t), t -> 0"
};

std::optional<DegenerationCurve> torus_degeneration(const std::vector<Octonion>& tuple);

} // namespace octlin
