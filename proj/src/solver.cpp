#include "octlin/solver.hpp"

namespace octlin {

namespace {

void require_nonzero(const Octonion& a, const char* which) {
    if (a.is_zero()) throw ZeroCoefficient(std::string("coefficient ") + which + " is zero");
}

std::string dims_label(const std::set<int>& dims) {
    if (dims.size() == 1) {
        int d = *dims.begin();
        if (d == -1) return "empty";
        if (d == 0) return "unique";
        if (d == 8) return "whole_space";
        return "flat:" + std::to_string(d);
    }
    std::string s = "flat:{";
    bool first = true;
    for (int d : dims) {
        if (!first) s += ",";
        first = false;
        s += d == -1 ? "empty" : d == 8 ? "whole_space" : std::to_string(d);
    }
    return s + "}";
}

Classification finish(Classification cls, const AffineFlat& flat) {
    cls.predicted_case = dims_label(cls.admissible_dims);
    cls.computed_dim = flat.dim();
    cls.consistent = cls.admissible_dims.count(flat.dim()) > 0;
    return cls;
}

// Nonzero scalar xi with b = xi * conj(a), if one exists.
bool parallel_to_conj(const Octonion& a, const Octonion& b, Scalar* xi_out) {
    Octonion ca = a.conj();
    const Field& f = a.field();
    Scalar xi = Scalar::zero(f);
    for (int k = 0; k < 8; ++k)
        if (!ca.coord(k).is_zero()) {
            xi = b.coord(k) / ca.coord(k);
            break;
        }
    if (xi.is_zero()) return false;
    if (!(b == xi * ca)) return false;
    if (xi_out) *xi_out = xi;
    return true;
}

} // namespace

SolveResult solve_ax(const Octonion& a, const Octonion& c) {
    require_nonzero(a, "a");
    auto [la, ra] = mul_operators(a);
    (void)ra;
    AffineFlat flat = solve_affine(la, c);

    Classification cls;
    Scalar na = a.norm();
    Octonion ann = a.conj() * c;
    cls.witnesses["n(a)"] = na.to_string();
    cls.witnesses["conj(a)*c"] = ann.to_string();
    if (!na.is_zero())
        cls.admissible_dims = {0};
    else if (ann.is_zero())
        cls.admissible_dims = {4};
    else
        cls.admissible_dims = {-1};
    return {flat, finish(std::move(cls), flat)};
}

SolveResult solve_xa(const Octonion& a, const Octonion& c) {
    require_nonzero(a, "a");
    const Field& f = a.field();

    // x*a = c  <=>  conj(a)*z = conj(c) with z = conj(x).
    auto [lconj, unused] = mul_operators(a.conj());
    (void)unused;
    AffineFlat zflat = solve_affine(lconj, c.conj());
    AffineFlat flat = zflat.is_empty() ? zflat : flat_map(zflat, conj_operator(f));

    auto [la2, ra] = mul_operators(a);
    (void)la2;
    AffineFlat direct = solve_affine(ra, c);
    if (flat != direct)
        throw Error("internal cross-check failed: involution route differs from R_a route");

    Classification cls;
    Scalar na = a.norm();
    Octonion ann = a * c.conj();
    cls.witnesses["n(a)"] = na.to_string();
    cls.witnesses["a*conj(c)"] = ann.to_string();
    if (!na.is_zero())
        cls.admissible_dims = {0};
    else if (ann.is_zero())
        cls.admissible_dims = {4};
    else
        cls.admissible_dims = {-1};
    return {flat, finish(std::move(cls), flat)};
}

SolveResult solve_axb(const Octonion& a, const Octonion& b, const Octonion& c) {
    require_nonzero(a, "a");
    require_nonzero(b, "b");
    auto [la, ra_] = mul_operators(a);
    (void)ra_;
    auto [lb_, rb] = mul_operators(b);
    (void)lb_;
    AffineFlat flat = solve_affine(rb * la, c);

    Classification cls;
    Scalar na = a.norm(), nb = b.norm();
    cls.witnesses["n(a)"] = na.to_string();
    cls.witnesses["n(b)"] = nb.to_string();
    if (!na.is_zero() && !nb.is_zero()) {
        cls.admissible_dims = {0};
    } else if (!na.is_zero()) { // b has zero norm
        Octonion ann = b * c.conj();
        cls.witnesses["b*conj(c)"] = ann.to_string();
        cls.admissible_dims = ann.is_zero() ? std::set<int>{4} : std::set<int>{-1};
    } else if (!nb.is_zero()) { // a has zero norm
        Octonion ann = a.conj() * (c * inverse(b));
        cls.witnesses["conj(a)*(c*b^-1)"] = ann.to_string();
        cls.admissible_dims = ann.is_zero() ? std::set<int>{4} : std::set<int>{-1};
    } else {
        cls.admissible_dims = {-1, 5, 7};
    }
    return {flat, finish(std::move(cls), flat)};
}

SolveResult solve_abx(const Octonion& a, const Octonion& b, const Octonion& c) {
    require_nonzero(a, "a");
    require_nonzero(b, "b");
    auto [la, ra_] = mul_operators(a);
    (void)ra_;
    auto [lb, rb_] = mul_operators(b);
    (void)rb_;
    AffineFlat flat = solve_affine(la * lb, c);

    Classification cls;
    Scalar na = a.norm(), nb = b.norm();
    cls.witnesses["n(a)"] = na.to_string();
    cls.witnesses["n(b)"] = nb.to_string();
    if (!na.is_zero() && !nb.is_zero()) {
        cls.admissible_dims = {0};
    } else if (!na.is_zero()) { // b has zero norm: b*x = a^-1 c
        Octonion ann = b.conj() * (inverse(a) * c);
        cls.witnesses["conj(b)*(a^-1*c)"] = ann.to_string();
        cls.admissible_dims = ann.is_zero() ? std::set<int>{4} : std::set<int>{-1};
    } else if (!nb.is_zero()) { // a has zero norm: solve a*y = c, then y = b*x
        Octonion ann = a.conj() * c;
        cls.witnesses["conj(a)*c"] = ann.to_string();
        cls.admissible_dims = ann.is_zero() ? std::set<int>{4} : std::set<int>{-1};
    } else {
        Scalar xi = Scalar::zero(a.field());
        if (parallel_to_conj(a, b, &xi)) {
            cls.witnesses["xi"] = xi.to_string();
            cls.admissible_dims = c.is_zero() ? std::set<int>{8} : std::set<int>{-1};
        } else {
            cls.admissible_dims = {-1, 4, 6};
        }
    }
    return {flat, finish(std::move(cls), flat)};
}

SolveResult solve_monomial(const MonomialTree& w, const Octonion& c) {
    const Field& f = c.field();
    for (const auto& leaf : w.constant_leaves())
        if (leaf.is_zero()) throw ZeroCoefficient("zero constant coefficient in monomial");
    LinOp8 m = w.operator_matrix(f);
    AffineFlat flat = solve_affine(m, c);

    Classification cls;
    bool all_invertible = true;
    int idx = 0;
    for (const auto& leaf : w.constant_leaves()) {
        Scalar n = leaf.norm();
        cls.witnesses["n(a" + std::to_string(++idx) + ")"] = n.to_string();
        if (n.is_zero()) all_invertible = false;
    }
    if (all_invertible)
        cls.admissible_dims = {0};
    else
        cls.admissible_dims = {-1, 4, 5, 6, 7, 8};
    return {flat, finish(std::move(cls), flat)};
}

bool necessary_conditions(PairShape shape, const Octonion& a, const Octonion& b,
                          const Octonion& c) {
    if (!a.norm().is_zero() || !b.norm().is_zero())
        throw ParameterViolation("necessary_conditions expects zero-norm a and b");
    return shape == PairShape::AXB ? (c * b.conj()).is_zero() : (a.conj() * c).is_zero();
}

DegenerationReport degeneration_consequences(const Equation& original,
                                             const Equation& degenerate) {
    if (!original.tree.same_shape(degenerate.tree))
        throw ShapeMismatch("equations have different monomial shapes");
    auto as = original.tree.constant_leaves();
    auto bs = degenerate.tree.constant_leaves();
    for (std::size_t i = 0; i < as.size(); ++i) {
        require_nonzero(as[i], "a_i");
        require_nonzero(bs[i], "a'_i");
        if (as[i].norm() != bs[i].norm())
            throw NormMismatch("coefficient " + std::to_string(i + 1) +
                               " changes norm; not a degeneration");
    }

    SolveResult rx = solve_monomial(original.tree, original.rhs);
    SolveResult ry = solve_monomial(degenerate.tree, degenerate.rhs);
    int dx = rx.flat.dim(), dy = ry.flat.dim();

    DegenerationReport report;
    report.dim_original = dx;
    report.dim_degenerate = dy;

    auto add = [&report](std::string name, bool applicable, bool holds, std::string detail) {
        if (applicable && !holds) report.all_hold = false;
        report.conclusions.push_back({std::move(name), applicable, holds, std::move(detail)});
    };

    add("uniqueness_equivalence", true, (dx == 0) == (dy == 0),
        "dims " + std::to_string(dx) + " / " + std::to_string(dy));

    const MonomialTree& t = original.tree;
    bool shape_ax = t.is_product() && t.left().is_constant() && t.right().is_variable();
    add("dim_equality_for_ax", shape_ax, !shape_ax || dx == dy,
        "dims " + std::to_string(dx) + " / " + std::to_string(dy));

    bool shape_axb = t.is_product() && t.right().is_constant() && t.left().is_product() &&
                     t.left().left().is_constant() && t.left().right().is_variable();
    add("dim4_equivalence_for_axb", shape_axb, !shape_axb || ((dx == 4) == (dy == 4)),
        "dims " + std::to_string(dx) + " / " + std::to_string(dy));

    bool shape_abx = t.is_product() && t.left().is_constant() && t.right().is_product() &&
                     t.right().left().is_constant() && t.right().right().is_variable();
    add("whole_space_equivalence_for_abx", shape_abx, !shape_abx || ((dx == 8) == (dy == 8)),
        "dims " + std::to_string(dx) + " / " + std::to_string(dy));

    return report;
}

} // namespace octlin
