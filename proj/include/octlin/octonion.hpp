#pragma once

// Split octonions as Zorn vector matrices: a scalar pair on the diagonal and
// a pair of 3-vectors off it. The product mixes dot and cross products; the
// norm alpha*beta - u.v is multiplicative and isotropic.

#include <array>
#include <string>

#include "octlin/scalar.hpp"

namespace octlin {

struct Vec3 {
    std::array<Scalar, 3> c;

    static Vec3 zero(const Field& f) {
        return {{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)}};
    }
    static Vec3 unit(int i, const Field& f); // i in {0,1,2}

    const Scalar& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    Scalar& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    Vec3 operator+(const Vec3& o) const;
    Vec3 operator-(const Vec3& o) const;
    Vec3 operator-() const;
    bool operator==(const Vec3& o) const { return c == o.c; }
    bool is_zero() const;
};

Vec3 operator*(const Scalar& s, const Vec3& v);
Scalar dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

class Octonion {
  public:
    Octonion() = default;
    Octonion(Scalar alpha, Vec3 u, Vec3 v, Scalar beta);

    static Octonion zero(const Field& f);
    static Octonion one(const Field& f);
    static Octonion e1(const Field& f);
    static Octonion e2(const Field& f);
    static Octonion u(int i, const Field& f); // i in {1,2,3}
    static Octonion v(int i, const Field& f);
    // Basis element by coordinate position 0..7 in the order
    // (alpha, u1, u2, u3, v1, v2, v3, beta).
    static Octonion basis_element(int k, const Field& f);
    static Octonion from_coords(const std::array<Scalar, 8>& coords);

    const Field& field() const { return alpha_.field(); }
    const Scalar& alpha() const { return alpha_; }
    const Scalar& beta() const { return beta_; }
    const Vec3& u_part() const { return u_; }
    const Vec3& v_part() const { return v_; }
    // Coordinate 0..7 in the order above.
    const Scalar& coord(int k) const;
    std::array<Scalar, 8> coords() const;

    Octonion operator+(const Octonion& o) const;
    Octonion operator-(const Octonion& o) const;
    Octonion operator-() const;
    Octonion operator*(const Octonion& o) const; // Zorn product
    bool operator==(const Octonion& o) const;
    bool operator!=(const Octonion& o) const { return !(*this == o); }
    bool is_zero() const;

    Octonion conj() const;      // swaps the diagonal, negates both vectors
    Octonion transpose() const; // swaps the two vector slots
    Scalar trace() const;       // alpha + beta
    Scalar norm() const;        // alpha*beta - u.v

    std::string to_string() const; // "(a1, ..., a8)"

  private:
    Scalar alpha_;
    Vec3 u_{};
    Vec3 v_{};
    Scalar beta_;
};

Octonion operator*(const Scalar& s, const Octonion& a);

inline Scalar qform(const Octonion& a, const Octonion& b) {
    return (a + b).norm() - a.norm() - b.norm();
}

// conj(a) / n(a); throws NotInvertible when the norm vanishes.
Octonion inverse(const Octonion& a);

// Octonion literal: a comma-separated 8-tuple of scalars, or one of the named
// constants e1, e2, u1, u2, u3, v1, v2, v3, one, zero.
Octonion parse_octonion(const std::string& text, const Field& f);

} // namespace octlin
