#include "octlin/flats.hpp"

namespace octlin {

namespace {

using Row = std::array<Scalar, 8>;

int leading_col(const Row& r) {
    for (int j = 0; j < 8; ++j)
        if (!r[static_cast<std::size_t>(j)].is_zero()) return j;
    return -1;
}

// Reduced row echelon form, in place; returns the nonzero rows.
std::vector<Row> rref(std::vector<Row> rows) {
    std::size_t r = 0;
    for (int col = 0; col < 8 && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        Scalar inv = rows[r][static_cast<std::size_t>(col)].inverse();
        for (int j = 0; j < 8; ++j) rows[r][static_cast<std::size_t>(j)] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Scalar f = rows[i][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = 0; j < 8; ++j)
                rows[i][static_cast<std::size_t>(j)] -= f * rows[r][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

} // namespace

AffineFlat AffineFlat::empty(const Field& f) { return AffineFlat(f); }

AffineFlat AffineFlat::single_point(const Octonion& p) { return make(p, {}); }

AffineFlat AffineFlat::whole_space(const Field& f) {
    std::vector<Octonion> dirs;
    dirs.reserve(8);
    for (int k = 0; k < 8; ++k) dirs.push_back(Octonion::basis_element(k, f));
    return make(Octonion::zero(f), dirs);
}

AffineFlat AffineFlat::make(const Octonion& point, const std::vector<Octonion>& directions) {
    AffineFlat flat(point.field());
    std::vector<Row> rows;
    rows.reserve(directions.size());
    for (const auto& d : directions) rows.push_back(d.coords());
    rows = rref(std::move(rows));

    Row p = point.coords();
    for (const auto& row : rows) {
        int lead = leading_col(row);
        Scalar f = p[static_cast<std::size_t>(lead)];
        if (f.is_zero()) continue;
        for (int j = 0; j < 8; ++j)
            p[static_cast<std::size_t>(j)] -= f * row[static_cast<std::size_t>(j)];
    }

    flat.dim_ = static_cast<int>(rows.size());
    flat.point_.push_back(Octonion::from_coords(p));
    for (const auto& row : rows) flat.basis_.push_back(Octonion::from_coords(row));
    return flat;
}

const Octonion& AffineFlat::point() const {
    if (is_empty()) throw Error("empty flat has no point");
    return point_.front();
}

bool AffineFlat::contains(const Octonion& x) const {
    if (is_empty()) return false;
    Row r = (x - point()).coords();
    for (const auto& b : basis_) {
        auto row = b.coords();
        int lead = leading_col(row);
        Scalar f = r[static_cast<std::size_t>(lead)];
        if (f.is_zero()) continue;
        for (int j = 0; j < 8; ++j)
            r[static_cast<std::size_t>(j)] -= f * row[static_cast<std::size_t>(j)];
    }
    for (const auto& s : r)
        if (!s.is_zero()) return false;
    return true;
}

bool AffineFlat::operator==(const AffineFlat& o) const {
    if (field_ != o.field_ || dim_ != o.dim_) return false;
    if (is_empty()) return true;
    return point_.front() == o.point_.front() && basis_ == o.basis_;
}

AffineFlat solve_affine(const LinOp8& M, const Octonion& c) {
    if (M.field() != c.field()) throw FieldMismatch("solve_affine across fields");
    const Field& f = M.field();

    // Eliminate on the augmented system [M | c].
    std::vector<std::array<Scalar, 9>> rows(8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = M.at(i, j);
        rows[static_cast<std::size_t>(i)][8] = c.coord(i);
    }
    std::size_t r = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < 8 && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        Scalar inv = rows[r][static_cast<std::size_t>(col)].inverse();
        for (int j = 0; j < 9; ++j) rows[r][static_cast<std::size_t>(j)] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Scalar g = rows[i][static_cast<std::size_t>(col)];
            if (g.is_zero()) continue;
            for (int j = 0; j < 9; ++j)
                rows[i][static_cast<std::size_t>(j)] -= g * rows[r][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (!rows[i][8].is_zero()) return AffineFlat::empty(f); // inconsistent

    std::array<bool, 8> is_pivot{};
    for (int col : pivot_col) is_pivot[static_cast<std::size_t>(col)] = true;

    std::array<Scalar, 8> p{};
    for (auto& s : p) s = Scalar::zero(f);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        p[static_cast<std::size_t>(pivot_col[i])] = rows[i][8];

    std::vector<Octonion> dirs;
    for (int free = 0; free < 8; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::array<Scalar, 8> d{};
        for (auto& s : d) s = Scalar::zero(f);
        d[static_cast<std::size_t>(free)] = Scalar::one(f);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            d[static_cast<std::size_t>(pivot_col[i])] = -rows[i][static_cast<std::size_t>(free)];
        dirs.push_back(Octonion::from_coords(d));
    }
    return AffineFlat::make(Octonion::from_coords(p), dirs);
}

AffineFlat flat_map(const AffineFlat& flat, const LinOp8& T) {
    if (!T.invertible()) throw SingularMap("flat_map requires an invertible operator");
    if (flat.is_empty()) return flat;
    std::vector<Octonion> dirs;
    dirs.reserve(flat.basis().size());
    for (const auto& b : flat.basis()) dirs.push_back(T.apply(b));
    return AffineFlat::make(T.apply(flat.point()), dirs);
}

} // namespace octlin
