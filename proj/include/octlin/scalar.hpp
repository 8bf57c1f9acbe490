#pragma once

// Exact scalars over the rationals or a prime field Fp (p <= 251), plus the
// tie-break relation used by the canonical-set membership tests: on nonzero
// elements the natural order of representatives, and every nonzero element
// compares below zero.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "octlin/errors.hpp"

namespace octlin {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Field descriptor: the rationals, or Fp for a prime p <= 251.
class Field {
  public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(int p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    int prime() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string name() const; // "Q" or "Fp:<p>"
    static Field parse(const std::string& text);

  private:
    int p_;
};

class Scalar {
  public:
    Scalar() : field_(), q_(0), r_(0) {}

    static Scalar zero(const Field& f) { return integer(0, f); }
    static Scalar one(const Field& f) { return integer(1, f); }
    static Scalar integer(long long n, const Field& f);
    static Scalar from_bigint(const BigInt& n, const Field& f);
    // Rationals only.
    static Scalar fraction(long long num, long long den);
    static Scalar from_bigrat(const BigRat& q);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws DivisionByZero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const; // throws DivisionByZero on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Rational value (rationals only).
    const BigRat& rational_value() const { return q_; }
    // Representative in [0, p) (prime fields only).
    std::int64_t fp_value() const { return r_; }

    std::string to_string() const; // "-3", "5/6", or the Fp representative
    // Accepts "-3", "5/6"; in Fp a fraction means num * den^{-1}.
    static Scalar parse(const std::string& text, const Field& f);

  private:
    Field field_;
    BigRat q_;        // rationals payload
    std::int64_t r_;  // prime-field payload, in [0, p)
};

// The total tie-break relation: exactly one of less(a,b), less(b,a) holds for
// a != b, and less(a, 0) for every nonzero a. Not transitive by design.
bool canonical_less(const Scalar& a, const Scalar& b);
inline bool canonical_leq(const Scalar& a, const Scalar& b) {
    return a == b || canonical_less(a, b);
}

} // namespace octlin
