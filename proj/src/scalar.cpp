#include "octlin/scalar.hpp"

#include <cctype>

namespace octlin {

namespace {

bool is_small_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t v, int p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// This boost version rejects construction with a negative denominator, so
// normalize the sign first.
BigRat make_rat(BigInt num, BigInt den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRat(num, den);
}

// Extended Euclid; p prime, 0 < a < p.
std::int64_t mod_inverse(std::int64_t a, int p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return mod_reduce(t, p);
}

} // namespace

Field Field::prime(int p) {
    if (p > 251 || !is_small_prime(p))
        throw ParameterViolation("prime field modulus must be a prime <= 251, got " +
                                 std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        try {
            return prime(std::stoi(text.substr(3)));
        } catch (const std::logic_error&) {
            throw ParameterViolation("bad field selector: " + text);
        }
    }
    throw ParameterViolation("bad field selector: " + text + " (expected Q or Fp:<p>)");
}

Scalar Scalar::integer(long long n, const Field& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational())
        s.q_ = BigRat(BigInt(n));
    else
        s.r_ = mod_reduce(n, f.prime());
    return s;
}

Scalar Scalar::from_bigint(const BigInt& n, const Field& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.q_ = BigRat(n);
    } else {
        BigInt r = n % f.prime();
        if (r < 0) r += f.prime();
        s.r_ = r.convert_to<std::int64_t>();
    }
    return s;
}

Scalar Scalar::fraction(long long num, long long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    Scalar s;
    s.q_ = make_rat(BigInt(num), BigInt(den)); // stored canonically, lowest terms
    return s;
}

Scalar Scalar::from_bigrat(const BigRat& q) {
    Scalar s;
    s.q_ = q;
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == BigRat(1) : r_ == 1;
}

namespace {
void require_same_field(const Field& a, const Field& b) {
    if (a != b)
        throw FieldMismatch("scalar fields differ: " + a.name() + " vs " + b.name());
}
} // namespace

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.prime() - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(field_, o.field_);
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.prime();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(field_, o.field_);
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = q_ - o.q_;
    else
        s.r_ = mod_reduce(r_ - o.r_, field_.prime());
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(field_, o.field_);
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = q_ * o.q_;
    else
        s.r_ = (r_ * o.r_) % field_.prime(); // p <= 251, no overflow
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = make_rat(boost::multiprecision::denominator(q_), boost::multiprecision::numerator(q_));
    else
        s.r_ = mod_inverse(r_, field_.prime());
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(field_, o.field_);
    if (o.is_zero()) throw DivisionByZero("division by zero");
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime_field()) return std::to_string(r_);
    std::string s = boost::multiprecision::numerator(q_).str();
    if (boost::multiprecision::denominator(q_) != 1) s += "/" + boost::multiprecision::denominator(q_).str();
    return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
    std::size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&]() -> BigInt {
        bool neg = false;
        if (i < n && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw SyntaxError("expected integer in scalar literal '" + text + "'", i);
        BigInt v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + (text[i++] - '0');
        return neg ? BigInt(-v) : v;
    };
    skip_ws();
    BigInt num = read_int();
    skip_ws();
    Scalar result = from_bigint(num, f);
    if (i < n && text[i] == '/') {
        ++i;
        skip_ws();
        BigInt den = read_int();
        skip_ws();
        if (den.is_zero()) throw DivisionByZero("zero denominator in '" + text + "'");
        result = result / from_bigint(den, f);
    }
    if (i != n) throw SyntaxError("trailing characters in scalar literal '" + text + "'", i);
    return result;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw FieldMismatch("canonical_less across fields");
    if (a == b) return false;
    if (b.is_zero()) return true;  // every nonzero element is below zero
    if (a.is_zero()) return false;
    if (a.field().is_rational()) return a.rational_value() < b.rational_value();
    return a.fp_value() < b.fp_value();
}

} // namespace octlin
