#include "octlin/octonion.hpp"

#include <cctype>

namespace octlin {

Vec3 Vec3::unit(int i, const Field& f) {
    Vec3 v = zero(f);
    v[i] = Scalar::one(f);
    return v;
}

Vec3 Vec3::operator+(const Vec3& o) const {
    return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}};
}

Vec3 Vec3::operator-(const Vec3& o) const {
    return {{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}};
}

Vec3 Vec3::operator-() const { return {{-c[0], -c[1], -c[2]}}; }

bool Vec3::is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

Vec3 operator*(const Scalar& s, const Vec3& v) {
    return {{s * v.c[0], s * v.c[1], s * v.c[2]}};
}

Scalar dot(const Vec3& a, const Vec3& b) {
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {{a.c[1] * b.c[2] - a.c[2] * b.c[1],
             a.c[2] * b.c[0] - a.c[0] * b.c[2],
             a.c[0] * b.c[1] - a.c[1] * b.c[0]}};
}

Octonion::Octonion(Scalar alpha, Vec3 u, Vec3 v, Scalar beta)
    : alpha_(std::move(alpha)), u_(std::move(u)), v_(std::move(v)), beta_(std::move(beta)) {
    if (alpha_.field() != beta_.field() || alpha_.field() != u_[0].field() ||
        alpha_.field() != v_[0].field())
        throw FieldMismatch("octonion components from different fields");
}

Octonion Octonion::zero(const Field& f) {
    return Octonion(Scalar::zero(f), Vec3::zero(f), Vec3::zero(f), Scalar::zero(f));
}

Octonion Octonion::one(const Field& f) {
    return Octonion(Scalar::one(f), Vec3::zero(f), Vec3::zero(f), Scalar::one(f));
}

Octonion Octonion::e1(const Field& f) {
    return Octonion(Scalar::one(f), Vec3::zero(f), Vec3::zero(f), Scalar::zero(f));
}

Octonion Octonion::e2(const Field& f) {
    return Octonion(Scalar::zero(f), Vec3::zero(f), Vec3::zero(f), Scalar::one(f));
}

Octonion Octonion::u(int i, const Field& f) {
    return Octonion(Scalar::zero(f), Vec3::unit(i - 1, f), Vec3::zero(f), Scalar::zero(f));
}

Octonion Octonion::v(int i, const Field& f) {
    return Octonion(Scalar::zero(f), Vec3::zero(f), Vec3::unit(i - 1, f), Scalar::zero(f));
}

Octonion Octonion::basis_element(int k, const Field& f) {
    std::array<Scalar, 8> c{};
    for (auto& s : c) s = Scalar::zero(f);
    c[static_cast<std::size_t>(k)] = Scalar::one(f);
    return from_coords(c);
}

Octonion Octonion::from_coords(const std::array<Scalar, 8>& c) {
    return Octonion(c[0], Vec3{{c[1], c[2], c[3]}}, Vec3{{c[4], c[5], c[6]}}, c[7]);
}

const Scalar& Octonion::coord(int k) const {
    switch (k) {
        case 0: return alpha_;
        case 1: case 2: case 3: return u_[k - 1];
        case 4: case 5: case 6: return v_[k - 4];
        default: return beta_;
    }
}

std::array<Scalar, 8> Octonion::coords() const {
    return {alpha_, u_[0], u_[1], u_[2], v_[0], v_[1], v_[2], beta_};
}

Octonion Octonion::operator+(const Octonion& o) const {
    return Octonion(alpha_ + o.alpha_, u_ + o.u_, v_ + o.v_, beta_ + o.beta_);
}

Octonion Octonion::operator-(const Octonion& o) const {
    return Octonion(alpha_ - o.alpha_, u_ - o.u_, v_ - o.v_, beta_ - o.beta_);
}

Octonion Octonion::operator-() const { return Octonion(-alpha_, -u_, -v_, -beta_); }

Octonion Octonion::operator*(const Octonion& o) const {
    // The two cross products enter with opposite signs in the two vector
    // slots; the diagonal mixes u against the other factor's v.
    return Octonion(alpha_ * o.alpha_ + dot(u_, o.v_),
                    alpha_ * o.u_ + o.beta_ * u_ - cross(v_, o.v_),
                    o.alpha_ * v_ + beta_ * o.v_ + cross(u_, o.u_),
                    beta_ * o.beta_ + dot(v_, o.u_));
}

bool Octonion::operator==(const Octonion& o) const {
    return alpha_ == o.alpha_ && u_ == o.u_ && v_ == o.v_ && beta_ == o.beta_;
}

bool Octonion::is_zero() const {
    return alpha_.is_zero() && u_.is_zero() && v_.is_zero() && beta_.is_zero();
}

Octonion Octonion::conj() const { return Octonion(beta_, -u_, -v_, alpha_); }

Octonion Octonion::transpose() const { return Octonion(alpha_, v_, u_, beta_); }

Scalar Octonion::trace() const { return alpha_ + beta_; }

Scalar Octonion::norm() const { return alpha_ * beta_ - dot(u_, v_); }

std::string Octonion::to_string() const {
    std::string s = "(";
    for (int k = 0; k < 8; ++k) {
        if (k) s += ", ";
        s += coord(k).to_string();
    }
    return s + ")";
}

Octonion operator*(const Scalar& s, const Octonion& a) {
    return Octonion(s * a.alpha(), s * a.u_part(), s * a.v_part(), s * a.beta());
}

Octonion inverse(const Octonion& a) {
    Scalar n = a.norm();
    if (n.is_zero()) throw NotInvertible("octonion has zero norm");
    return n.inverse() * a.conj();
}

Octonion parse_octonion(const std::string& text, const Field& f) {
    // Trim and try a named constant first.
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    std::string t = b == std::string::npos ? "" : text.substr(b, e - b + 1);
    if (t == "zero") return Octonion::zero(f);
    if (t == "one") return Octonion::one(f);
    if (t == "e1") return Octonion::e1(f);
    if (t == "e2") return Octonion::e2(f);
    if (t.size() == 2 && (t[0] == 'u' || t[0] == 'v') && t[1] >= '1' && t[1] <= '3') {
        int i = t[1] - '0';
        return t[0] == 'u' ? Octonion::u(i, f) : Octonion::v(i, f);
    }

    std::array<Scalar, 8> c{};
    std::size_t pos = 0;
    for (int k = 0; k < 8; ++k) {
        std::size_t comma = text.find(',', pos);
        std::string piece =
            k == 7 ? text.substr(pos)
                   : text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (k < 7 && comma == std::string::npos)
            throw SyntaxError("octonion literal needs 8 comma-separated scalars: '" + text + "'",
                              pos);
        c[static_cast<std::size_t>(k)] = Scalar::parse(piece, f);
        pos = comma + 1;
    }
    return Octonion::from_coords(c);
}

} // namespace octlin
