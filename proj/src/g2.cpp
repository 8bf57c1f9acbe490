#include "octlin/g2.hpp"

#include <sstream>

namespace octlin {

namespace {

Scalar det3(const std::array<Scalar, 9>& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

// Cofactor matrix; for det = 1 this equals the inverse transpose.
std::array<Scalar, 9> cofactor3(const std::array<Scalar, 9>& m) {
    return {m[4] * m[8] - m[5] * m[7], m[5] * m[6] - m[3] * m[8], m[3] * m[7] - m[4] * m[6],
            m[2] * m[7] - m[1] * m[8], m[0] * m[8] - m[2] * m[6], m[1] * m[6] - m[0] * m[7],
            m[1] * m[5] - m[2] * m[4], m[2] * m[3] - m[0] * m[5], m[0] * m[4] - m[1] * m[3]};
}

Vec3 mat_apply(const std::array<Scalar, 9>& m, const Vec3& x) {
    return {{m[0] * x[0] + m[1] * x[1] + m[2] * x[2],
             m[3] * x[0] + m[4] * x[1] + m[5] * x[2],
             m[6] * x[0] + m[7] * x[1] + m[8] * x[2]}};
}

} // namespace

SL3::SL3(const std::array<Scalar, 9>& entries) : entries_(entries) {
    if (!det3(entries_).is_one())
        throw NotUnimodular("matrix determinant is " + det3(entries_).to_string() +
                            ", expected 1");
    inv_transpose_ = cofactor3(entries_);
}

SL3 SL3::identity(const Field& f) {
    Scalar z = Scalar::zero(f), o = Scalar::one(f);
    return SL3({o, z, z, z, o, z, z, z, o});
}

SL3 SL3::diag(const Scalar& t1, const Scalar& t2, const Scalar& t3) {
    Scalar z = Scalar::zero(t1.field());
    return SL3({t1, z, z, z, t2, z, z, z, t3});
}

SL3 SL3::parse(const std::string& text, const Field& f) {
    std::array<Scalar, 9> e{};
    std::stringstream rows(text);
    std::string row;
    int i = 0;
    while (std::getline(rows, row, ';')) {
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            if (i >= 9) throw SyntaxError("matrix has more than 9 entries: '" + text + "'", 0);
            e[static_cast<std::size_t>(i++)] = Scalar::parse(cell, f);
        }
    }
    if (i != 9) throw SyntaxError("matrix needs 9 entries 'a,b,c;d,e,f;g,h,i'", 0);
    return SL3(e);
}

SL3 SL3::operator*(const SL3& o) const {
    std::array<Scalar, 9> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Scalar s = Scalar::zero(field());
            for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
            r[static_cast<std::size_t>(i * 3 + j)] = s;
        }
    return SL3(r);
}

Octonion SL3::act(const Octonion& a) const {
    return Octonion(a.alpha(), mat_apply(entries_, a.u_part()),
                    mat_apply(inv_transpose_, a.v_part()), a.beta());
}

LinOp8 SL3::as_linop() const {
    std::array<Octonion, 8> images{};
    for (int k = 0; k < 8; ++k)
        images[static_cast<std::size_t>(k)] = act(Octonion::basis_element(k, field()));
    return LinOp8::from_images(images);
}

std::optional<std::vector<Octonion>> torus_limit(const std::vector<Octonion>& tuple) {
    std::vector<Octonion> out;
    out.reserve(tuple.size());
    for (const auto& a : tuple) {
        // diag(t,1,1/t): u -> (t u1, u2, u3/t), v -> (v1/t, v2, t v3).
        if (!a.coord(3).is_zero() || !a.coord(4).is_zero()) return std::nullopt;
        const Field& f = a.field();
        Scalar z = Scalar::zero(f);
        out.push_back(Octonion(a.alpha(), Vec3{{z, a.coord(2), z}}, Vec3{{z, a.coord(5), z}},
                               a.beta()));
    }
    return out;
}

std::optional<DegenerationCurve> torus_degeneration(const std::vector<Octonion>& tuple) {
    auto limit = torus_limit(tuple);
    if (!limit) return std::nullopt;
    return DegenerationCurve{tuple, *limit, "diag(t,1,1/t), t -> 0"};
}

} // namespace octlin
