#include "octlin/linop.hpp"

#include <vector>

namespace octlin {

LinOp8::LinOp8(const Field& f) : field_(f) {
    for (auto& s : m_) s = Scalar::zero(f);
}

LinOp8 LinOp8::identity(const Field& f) {
    LinOp8 m(f);
    for (int i = 0; i < 8; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

LinOp8 LinOp8::from_images(const std::array<Octonion, 8>& images) {
    LinOp8 m(images[0].field());
    for (int col = 0; col < 8; ++col) {
        auto c = images[static_cast<std::size_t>(col)].coords();
        for (int row = 0; row < 8; ++row) m.at(row, col) = c[static_cast<std::size_t>(row)];
    }
    return m;
}

LinOp8 LinOp8::operator*(const LinOp8& o) const {
    if (field_ != o.field_) throw FieldMismatch("operator composition across fields");
    LinOp8 r(field_);
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < 8; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Octonion LinOp8::apply(const Octonion& x) const {
    if (field_ != x.field()) throw FieldMismatch("operator applied across fields");
    auto xc = x.coords();
    std::array<Scalar, 8> yc{};
    for (int i = 0; i < 8; ++i) {
        Scalar s = Scalar::zero(field_);
        for (int j = 0; j < 8; ++j) s += at(i, j) * xc[static_cast<std::size_t>(j)];
        yc[static_cast<std::size_t>(i)] = s;
    }
    return Octonion::from_coords(yc);
}

int LinOp8::rank() const {
    // Plain exact elimination with leading-nonzero pivoting.
    std::vector<std::array<Scalar, 8>> rows(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
    int r = 0;
    for (int col = 0; col < 8 && r < 8; ++col) {
        int piv = -1;
        for (int i = r; i < 8; ++i)
            if (!rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(r)]);
        Scalar inv = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].inverse();
        for (int j = col; j < 8; ++j)
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= inv;
        for (int i = r + 1; i < 8; ++i) {
            Scalar f = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = col; j < 8; ++j)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    return r;
}

std::pair<LinOp8, LinOp8> mul_operators(const Octonion& a) {
    const Field& f = a.field();
    std::array<Octonion, 8> left{}, right{};
    for (int k = 0; k < 8; ++k) {
        Octonion b = Octonion::basis_element(k, f);
        left[static_cast<std::size_t>(k)] = a * b;
        right[static_cast<std::size_t>(k)] = b * a;
    }
    return {LinOp8::from_images(left), LinOp8::from_images(right)};
}

LinOp8 conj_operator(const Field& f) {
    std::array<Octonion, 8> images{};
    for (int k = 0; k < 8; ++k)
        images[static_cast<std::size_t>(k)] = Octonion::basis_element(k, f).conj();
    return LinOp8::from_images(images);
}

} // namespace octlin
