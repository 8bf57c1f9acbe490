#pragma once

// Exact 8x8 operators on the coordinate space of octonions. Column
// convention: (M * x)_i = sum_j M[i][j] x_j with coordinates in the
// (alpha, u1, u2, u3, v1, v2, v3, beta) order.

#include <array>
#include <utility>

#include "octlin/octonion.hpp"

namespace octlin {

class LinOp8 {
  public:
    explicit LinOp8(const Field& f);

    static LinOp8 identity(const Field& f);
    static LinOp8 zero(const Field& f) { return LinOp8(f); }
    // Column k is the image of the k-th basis octonion.
    static LinOp8 from_images(const std::array<Octonion, 8>& images);

    const Field& field() const { return field_; }
    const Scalar& at(int row, int col) const {
        return m_[static_cast<std::size_t>(row * 8 + col)];
    }
    Scalar& at(int row, int col) { return m_[static_cast<std::size_t>(row * 8 + col)]; }

    LinOp8 operator*(const LinOp8& o) const; // composition: (this ∘ o)
    Octonion apply(const Octonion& x) const;
    bool operator==(const LinOp8& o) const { return m_ == o.m_; }

    int rank() const; // exact Gaussian elimination
    bool invertible() const { return rank() == 8; }

  private:
    Field field_;
    std::array<Scalar, 64> m_;
};

// Left and right multiplication operators of a: L_a x = a*x, R_a x = x*a.
std::pair<LinOp8, LinOp8> mul_operators(const Octonion& a);

// The involution as a linear operator (used by the x*a = c conjugation trick).
LinOp8 conj_operator(const Field& f);

} // namespace octlin
