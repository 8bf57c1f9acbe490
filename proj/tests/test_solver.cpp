#include <doctest.h>

#include "octlin/canonical.hpp"
#include "octlin/sampling.hpp"
#include "octlin/solver.hpp"

using namespace octlin;

namespace {

const Field Q = Field::rationals();

Scalar S(long long n) { return Scalar::integer(n, Q); }

Octonion coords(std::initializer_list<long long> vals, const Field& f = Q) {
    std::array<Scalar, 8> c{};
    int k = 0;
    for (long long v : vals) c[static_cast<std::size_t>(k++)] = Scalar::integer(v, f);
    return Octonion::from_coords(c);
}

Octonion f3_point(int idx, const Field& f3) {
    std::array<Scalar, 8> c{};
    for (int k = 0; k < 8; ++k) {
        c[static_cast<std::size_t>(k)] = Scalar::integer(idx % 3, f3);
        idx /= 3;
    }
    return Octonion::from_coords(c);
}

// Half invertible, half zero-norm.
Octonion stratified_coefficient(Rng& rng, const Field& f) {
    return rng.coin() ? random_invertible_octonion(rng, f, 8)
                      : random_zero_norm_octonion(rng, f, 8);
}

} // namespace

TEST_CASE("left-multiplication equation on pinned inputs") {
    Rng rng(1);
    Octonion c = random_octonion(rng, Q);
    SolveResult unit = solve_ax(Octonion::one(Q), c);
    CHECK(unit.flat.dim() == 0);
    CHECK(unit.flat.point() == c);
    CHECK(unit.classification.predicted_case == "unique");

    // zero-norm coefficient with an admissible right side: a 4-flat with the
    // four pinned coordinates x3 = 1, x4 = -1, x5 = 1, x8 = 1
    SolveResult fam = solve_ax(Octonion::u(1, Q), coords({1, 1, 0, 0, 0, 1, 1, 0}));
    CHECK(fam.flat.dim() == 4);
    std::vector<Octonion> dirs;
    for (int k : {0, 1, 5, 6}) dirs.push_back(Octonion::basis_element(k, Q));
    CHECK(fam.flat == AffineFlat::make(coords({0, 0, 1, -1, 1, 0, 0, 1}), dirs));
    CHECK(fam.classification.predicted_case == "flat:4");
    CHECK(fam.classification.consistent);

    SolveResult none = solve_ax(Octonion::e1(Q), Octonion::e2(Q));
    CHECK(none.flat.is_empty());
    CHECK(none.classification.predicted_case == "empty");

    CHECK_THROWS_AS(solve_ax(Octonion::zero(Q), c), ZeroCoefficient);
}

TEST_CASE("left-multiplication classification matches the flat exhaustively over F3") {
    Field f3 = Field::prime(3);
    Rng rng(2);
    std::vector<Octonion> as = {Octonion::e1(f3), Octonion::u(1, f3),
                                random_zero_norm_octonion(rng, f3)};
    for (const auto& a : as) {
        for (int idx = 0; idx < 6561; ++idx) {
            Octonion c = f3_point(idx, f3);
            SolveResult r = solve_ax(a, c);
            REQUIRE(r.classification.consistent);
            bool solvable = (a.conj() * c).is_zero();
            REQUIRE(r.flat.is_empty() == !solvable);
            if (solvable) REQUIRE(r.flat.dim() == 4);
        }
    }
}

TEST_CASE("left-multiplication classification on random rational inputs") {
    Rng rng(3);
    for (int t = 0; t < 500; ++t) {
        Octonion a = stratified_coefficient(rng, Q);
        Octonion c = rng.coin() ? random_octonion(rng, Q, 8)
                                : a * random_octonion(rng, Q, 8); // solvable half
        SolveResult r = solve_ax(a, c);
        REQUIRE(r.classification.consistent);
        if (!a.norm().is_zero()) {
            REQUIRE(r.flat.dim() == 0);
            REQUIRE(r.flat.point() == inverse(a) * c);
        } else {
            REQUIRE(((a.conj() * c).is_zero() ? r.flat.dim() == 4 : r.flat.is_empty()));
        }
    }
}

TEST_CASE("right-multiplication equation") {
    Rng rng(4);
    Octonion c = random_octonion(rng, Q);
    SolveResult unit = solve_xa(Octonion::one(Q), c);
    CHECK(unit.flat.point() == c);

    // invertible coefficient: the unique solution is c * a^-1
    for (int t = 0; t < 50; ++t) {
        Octonion a = random_invertible_octonion(rng, Q, 8);
        Octonion rhs = random_octonion(rng, Q, 8);
        SolveResult r = solve_xa(a, rhs);
        REQUIRE(r.flat.dim() == 0);
        REQUIRE(r.flat.point() == rhs * inverse(a));
        REQUIRE(r.flat.point() * a == rhs);
    }

    // zero-norm coefficient: the flat is the involution image of the
    // left-multiplication flat of the conjugated equation
    SolveResult left = solve_ax(Octonion::u(1, Q).conj(), Octonion::u(1, Q).conj());
    SolveResult right = solve_xa(Octonion::u(1, Q), Octonion::u(1, Q));
    CHECK(right.flat.dim() == 4);
    CHECK(left.flat.dim() == 4);
    AffineFlat mapped = flat_map(left.flat, conj_operator(Q));
    CHECK(right.flat == mapped);

    // solutions actually solve x*a = c
    Octonion member = right.flat.point();
    for (const auto& b : right.flat.basis()) member = member + S(2) * b;
    CHECK(member * Octonion::u(1, Q) == Octonion::u(1, Q));
}

TEST_CASE("two-sided sandwich equation on pinned inputs") {
    SolveResult dim7 = solve_axb(Octonion::u(1, Q), Octonion::v(2, Q), Octonion::u(1, Q));
    CHECK(dim7.flat.dim() == 7);
    CHECK(dim7.flat.contains(Octonion::u(2, Q)));
    CHECK(dim7.classification.predicted_case == "flat:{empty,5,7}");
    CHECK(dim7.classification.consistent);

    // annihilation holds yet no solution exists
    SolveResult empty = solve_axb(Octonion::e1(Q), Octonion::u(1, Q), Octonion::e2(Q));
    CHECK(empty.flat.is_empty());
    CHECK((Octonion::e2(Q) * Octonion::u(1, Q).conj()).is_zero());

    Rng rng(5);
    Octonion c = random_octonion(rng, Q);
    SolveResult unit = solve_axb(Octonion::one(Q), Octonion::one(Q), c);
    CHECK(unit.flat.point() == c);
}

TEST_CASE("nested product equation on pinned inputs") {
    SolveResult whole = solve_abx(Octonion::e1(Q), Octonion::e2(Q), Octonion::zero(Q));
    CHECK(whole.flat == AffineFlat::whole_space(Q));
    CHECK(whole.classification.predicted_case == "whole_space");
    CHECK(whole.classification.witnesses.at("xi") == "1");

    SolveResult dim6 = solve_abx(Octonion::u(1, Q), Octonion::v(2, Q),
                                 Octonion::u(1, Q) + Octonion::v(2, Q));
    CHECK(dim6.flat.dim() == 6);
    CHECK(dim6.flat.contains(Octonion::u(2, Q) - Octonion::v(1, Q)));

    Rng rng(6);
    Octonion c = random_octonion(rng, Q);
    SolveResult unit = solve_abx(Octonion::one(Q), Octonion::one(Q), c);
    CHECK(unit.flat.point() == c);
}

TEST_CASE("dimension strata for the pair shapes") {
    Rng rng(7);
    for (int t = 0; t < 150; ++t) {
        Octonion a = stratified_coefficient(rng, Q);
        Octonion b = stratified_coefficient(rng, Q);
        Octonion x0 = random_octonion(rng, Q, 8);
        bool solvable_draw = rng.coin();

        Octonion c1 = solvable_draw ? (a * x0) * b : random_octonion(rng, Q, 8);
        int d1 = solve_axb(a, b, c1).flat.dim();
        REQUIRE((d1 == -1 || d1 == 0 || d1 == 4 || d1 == 5 || d1 == 7));

        Octonion c2 = solvable_draw ? a * (b * x0) : random_octonion(rng, Q, 8);
        SolveResult r2 = solve_abx(a, b, c2);
        REQUIRE((r2.flat.dim() == -1 || r2.flat.dim() == 0 || r2.flat.dim() == 4 ||
                 r2.flat.dim() == 6 || r2.flat.dim() == 8));
        REQUIRE(r2.classification.consistent);

        bool both_invertible = !a.norm().is_zero() && !b.norm().is_zero();
        REQUIRE((d1 == 0) == both_invertible);
        REQUIRE((r2.flat.dim() == 0) == both_invertible);
    }
}

TEST_CASE("monomial equations reduce to the composed operator") {
    // (a1*x)*a2 matches the sandwich solver
    MonomialTree w = MonomialTree::product(
        MonomialTree::product(MonomialTree::constant("a1", Octonion::u(1, Q)),
                              MonomialTree::variable()),
        MonomialTree::constant("a2", Octonion::v(2, Q)));
    SolveResult viaw = solve_monomial(w, Octonion::u(1, Q));
    SolveResult direct = solve_axb(Octonion::u(1, Q), Octonion::v(2, Q), Octonion::u(1, Q));
    CHECK(viaw.flat == direct.flat);
    CHECK(viaw.flat.dim() == 7);

    // all-invertible trees have the unique nested-inverse solution
    Rng rng(8);
    for (int t = 0; t < 60; ++t) {
        int m = 1 + static_cast<int>(rng.below(4));
        MonomialTree tree = random_monomial_tree(
            rng, m, [](Rng& r) { return random_invertible_octonion(r, Q, 6); });
        Octonion x0 = random_octonion(rng, Q, 6);
        Octonion c = tree.evaluate(x0);
        SolveResult r = solve_monomial(tree, c);
        REQUIRE(r.flat.dim() == 0);
        REQUIRE(r.flat.point() == x0);
        REQUIRE(r.classification.predicted_case == "unique");
    }

    CHECK_THROWS_AS(
        solve_monomial(MonomialTree::product(MonomialTree::constant("z", Octonion::zero(Q)),
                                             MonomialTree::variable()),
                       Octonion::zero(Q)),
        ZeroCoefficient);
    CHECK_THROWS_AS(solve_monomial(MonomialTree::constant("a", Octonion::one(Q)),
                                   Octonion::zero(Q)),
                    NoVariable);
}

TEST_CASE("monomial dimension strata and the uniqueness criterion") {
    Rng rng(9);
    for (int t = 0; t < 150; ++t) {
        int m = 1 + static_cast<int>(rng.below(5));
        MonomialTree tree =
            random_monomial_tree(rng, m, [](Rng& r) {
                return r.coin() ? random_invertible_octonion(r, Q, 6)
                                : random_zero_norm_octonion(r, Q, 6);
            });
        Octonion c = rng.coin() ? tree.evaluate(random_octonion(rng, Q, 6))
                                : random_octonion(rng, Q, 6);
        SolveResult r = solve_monomial(tree, c);
        int d = r.flat.dim();
        REQUIRE((d == -1 || d == 0 || (d >= 4 && d <= 8)));
        bool all_invertible = true;
        for (const auto& leaf : tree.constant_leaves())
            if (leaf.norm().is_zero()) all_invertible = false;
        REQUIRE((d == 0) == all_invertible);
        REQUIRE(r.classification.consistent);
    }
}

TEST_CASE("solutions transported along the block automorphisms") {
    Rng rng(10);
    for (int t = 0; t < 50; ++t) {
        SL3 g = random_sl3(rng, Q, 3, 4);
        Octonion a = stratified_coefficient(rng, Q);
        Octonion b = stratified_coefficient(rng, Q);
        Octonion c = rng.coin() ? (a * random_octonion(rng, Q, 6)) * b
                                : random_octonion(rng, Q, 6);
        AffineFlat before = solve_axb(a, b, c).flat;
        AffineFlat after = solve_axb(g.act(a), g.act(b), g.act(c)).flat;
        REQUIRE(after.dim() == before.dim());
        if (!before.is_empty()) REQUIRE(after == flat_map(before, g.as_linop()));
    }
}

TEST_CASE("necessary conditions") {
    // both printed counterexamples: the condition holds, the set is empty
    CHECK(necessary_conditions(PairShape::AXB, Octonion::e1(Q), Octonion::u(1, Q),
                               Octonion::e2(Q)));
    CHECK(solve_axb(Octonion::e1(Q), Octonion::u(1, Q), Octonion::e2(Q)).flat.is_empty());

    CHECK(necessary_conditions(PairShape::ABX, Octonion::e1(Q), Octonion::e2(Q),
                               Octonion::e1(Q)));
    CHECK(solve_abx(Octonion::e1(Q), Octonion::e2(Q), Octonion::e1(Q)).flat.is_empty());

    // solvable instances always satisfy the condition
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        Octonion a = random_zero_norm_octonion(rng, Q, 6);
        Octonion b = random_zero_norm_octonion(rng, Q, 6);
        Octonion x0 = random_octonion(rng, Q, 6);
        Octonion c_axb = (a * x0) * b;
        if (!solve_axb(a, b, c_axb).flat.is_empty())
            REQUIRE(necessary_conditions(PairShape::AXB, a, b, c_axb));
        Octonion c_abx = a * (b * x0);
        if (!solve_abx(a, b, c_abx).flat.is_empty())
            REQUIRE(necessary_conditions(PairShape::ABX, a, b, c_abx));
    }

    CHECK_THROWS_AS(
        necessary_conditions(PairShape::AXB, Octonion::one(Q), Octonion::u(1, Q),
                             Octonion::zero(Q)),
        ParameterViolation);
}

TEST_CASE("degeneration reports: identity, orbit moves, torus limits") {
    Rng rng(12);
    for (int t = 0; t < 30; ++t) {
        int m = 1 + static_cast<int>(rng.below(3));
        MonomialTree tree = random_monomial_tree(rng, m, [&](Rng& r) {
            return r.coin() ? random_invertible_octonion(r, Q, 5)
                            : random_zero_norm_octonion(r, Q, 5);
        });
        Octonion c = rng.coin() ? tree.evaluate(random_octonion(rng, Q, 5))
                                : random_octonion(rng, Q, 5);
        Equation eq{tree, c};

        DegenerationReport self = degeneration_consequences(eq, eq);
        REQUIRE(self.all_hold);

        // push through an automorphism
        SL3 g = random_sl3(rng, Q, 3, 4);
        std::vector<Octonion> moved;
        for (const auto& leaf : tree.constant_leaves()) moved.push_back(g.act(leaf));
        int next = 0;
        auto rebuild = [&](auto&& self_fn, const MonomialTree& n) -> MonomialTree {
            if (n.is_variable()) return MonomialTree::variable();
            if (n.is_constant())
                return MonomialTree::constant(n.constant_name(),
                                              moved[static_cast<std::size_t>(next++)]);
            MonomialTree l = self_fn(self_fn, n.left());
            MonomialTree r = self_fn(self_fn, n.right());
            return MonomialTree::product(std::move(l), std::move(r));
        };
        Equation eq2{rebuild(rebuild, tree), g.act(c)};
        DegenerationReport orb = degeneration_consequences(eq, eq2);
        REQUIRE(orb.all_hold);
        REQUIRE(orb.dim_original == orb.dim_degenerate);
    }
}

TEST_CASE("degeneration reports: precondition errors") {
    MonomialTree ax = MonomialTree::product(MonomialTree::constant("a", Octonion::u(1, Q)),
                                            MonomialTree::variable());
    MonomialTree xa = MonomialTree::product(MonomialTree::variable(),
                                            MonomialTree::constant("a", Octonion::u(1, Q)));
    Equation eq{ax, Octonion::zero(Q)};
    CHECK_THROWS_AS(degeneration_consequences(eq, Equation{xa, Octonion::zero(Q)}),
                    ShapeMismatch);

    MonomialTree ax2 = MonomialTree::product(MonomialTree::constant("a", Octonion::one(Q)),
                                             MonomialTree::variable());
    CHECK_THROWS_AS(degeneration_consequences(eq, Equation{ax2, Octonion::zero(Q)}),
                    NormMismatch);
}

TEST_CASE("degeneration reports flag dimension jumps") {
    // Torus limit of (u2, u1) is (u2, 0): the source equation u2*x = u1 is
    // unsolvable while the limit equation u2*x = 0 has a 4-flat, so the
    // dimension-equality conclusion trips even though the pair is a genuine
    // closure point. The checker reports exactly what it sees.
    MonomialTree src = MonomialTree::product(MonomialTree::constant("a", Octonion::u(2, Q)),
                                             MonomialTree::variable());
    Equation eq{src, Octonion::u(1, Q)};
    auto lim = torus_limit({Octonion::u(2, Q), Octonion::u(1, Q)});
    REQUIRE(lim.has_value());
    REQUIRE((*lim)[0] == Octonion::u(2, Q));
    REQUIRE((*lim)[1].is_zero());

    MonomialTree dst = MonomialTree::product(MonomialTree::constant("a", (*lim)[0]),
                                             MonomialTree::variable());
    DegenerationReport rep = degeneration_consequences(eq, Equation{dst, (*lim)[1]});
    CHECK(rep.dim_original == -1);
    CHECK(rep.dim_degenerate == 4);
    CHECK_FALSE(rep.all_hold);
    bool found = false;
    for (const auto& con : rep.conclusions)
        if (con.name == "dim_equality_for_ax") {
            found = true;
            CHECK(con.applicable);
            CHECK_FALSE(con.holds);
        }
    CHECK(found);
}
