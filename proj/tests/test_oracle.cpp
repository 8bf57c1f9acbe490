#include <doctest.h>

#include "octlin/canonical.hpp"
#include "octlin/oracle.hpp"
#include "octlin/sampling.hpp"
#include "octlin/solver.hpp"

using namespace octlin;

namespace {

const Field F3 = Field::prime(3);

MonomialTree ax_tree(const Octonion& a) {
    return MonomialTree::product(MonomialTree::constant("a1", a), MonomialTree::variable());
}

MonomialTree axb_tree(const Octonion& a, const Octonion& b) {
    return MonomialTree::product(MonomialTree::product(MonomialTree::constant("a1", a),
                                                       MonomialTree::variable()),
                                 MonomialTree::constant("a2", b));
}

} // namespace

TEST_CASE("pinned counts") {
    // unique solution
    EnumerationResult one = enumerate_solutions(ax_tree(Octonion::one(F3)), Octonion::e1(F3), 3);
    CHECK(one.solution_count == 1);
    CHECK(one.samples.size() == 1);

    // 4-flat: 3^4 points
    EnumerationResult u1 = enumerate_solutions(ax_tree(Octonion::u(1, F3)), Octonion::u(1, F3), 3);
    CHECK(u1.solution_count == 81);

    // 7-flat: 3^7 points
    EnumerationResult xiv = enumerate_solutions(
        axb_tree(Octonion::u(1, F3), Octonion::v(2, F3)), Octonion::u(1, F3), 3);
    CHECK(xiv.solution_count == 2187);
    CHECK(xiv.samples.size() == 16);

    // inconsistent instance
    EnumerationResult none =
        enumerate_solutions(ax_tree(Octonion::e1(F3)), Octonion::e2(F3), 3);
    CHECK(none.solution_count == 0);
    CHECK(none.samples.empty());
}

TEST_CASE("raw-representative arithmetic agrees with the exact algebra") {
    // over F2 on the full basis-pair table, plus random octonions over F3/F5
    for (int p : {2, 3, 5}) {
        Field f = Field::prime(p);
        Rng rng(static_cast<std::uint64_t>(p));
        for (int t = 0; t < 100; ++t) {
            Octonion a = random_octonion(rng, f), b = random_octonion(rng, f);
            MonomialTree w = MonomialTree::product(MonomialTree::constant("a1", a),
                                                   MonomialTree::variable());
            // count solutions of a*x = a*b two ways: the kernel coset size
            // comes out of the Scalar-based solver, the count from the raw loop
            EnumerationResult res = enumerate_solutions(w, a * b, p);
            AffineFlat flat = solve_monomial(w, a * b).flat;
            std::uint64_t expect = 1;
            for (int k = 0; k < flat.dim(); ++k) expect *= static_cast<std::uint64_t>(p);
            REQUIRE(res.solution_count == expect);
        }
    }
}

TEST_CASE("serial reference and parallel kernel are bit-identical") {
    Rng rng(42);
    for (int t = 0; t < 10; ++t) {
        int m = 1 + static_cast<int>(rng.below(3));
        MonomialTree w = random_monomial_tree(
            rng, m, [](Rng& r) { return random_nonzero_octonion(r, F3, 2); });
        Octonion c = rng.coin() ? w.evaluate(random_octonion(rng, F3))
                                : random_octonion(rng, F3);
        EnumerationResult serial = enumerate_solutions_serial(w, c, 3);
        EnumerationResult parallel = enumerate_solutions(w, c, 3);
        REQUIRE(serial == parallel);
    }
    // and once over F2 and F5
    MonomialTree w2 = ax_tree(Octonion::u(1, Field::prime(2)));
    CHECK(enumerate_solutions_serial(w2, Octonion::zero(Field::prime(2)), 2) ==
          enumerate_solutions(w2, Octonion::zero(Field::prime(2)), 2));
    Field f5 = Field::prime(5);
    MonomialTree w5 = ax_tree(Octonion::u(1, f5));
    CHECK(enumerate_solutions_serial(w5, Octonion::u(1, f5), 5) ==
          enumerate_solutions(w5, Octonion::u(1, f5), 5));
}

TEST_CASE("samples come in lexicographic order") {
    EnumerationResult res = enumerate_solutions(ax_tree(Octonion::u(1, F3)),
                                                Octonion::zero(F3), 3);
    CHECK(res.solution_count == 81);
    REQUIRE(res.samples.size() == 16);
    for (std::size_t i = 1; i < res.samples.size(); ++i)
        REQUIRE(res.samples[i - 1] < res.samples[i]);
    // the zero solution is lexicographically first
    CHECK(res.samples[0] == std::array<int, 8>{0, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("pointwise comparison against the solver on random equations") {
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        int m = 1 + static_cast<int>(rng.below(4));
        MonomialTree w = random_monomial_tree(rng, m, [](Rng& r) {
            return r.coin() ? random_invertible_octonion(r, F3, 2)
                            : random_zero_norm_octonion(r, F3, 2);
        });
        Octonion c = rng.coin() ? w.evaluate(random_octonion(rng, F3))
                                : random_octonion(rng, F3);
        OracleComparison cmp = compare_with_solver(w, c, 3);
        CAPTURE(cmp.enumeration.equation);
        REQUIRE(cmp.match);
        REQUIRE_FALSE(cmp.first_discrepancy.has_value());
    }
}

TEST_CASE("empty instance matches with count zero") {
    OracleComparison cmp = compare_with_solver(ax_tree(Octonion::e1(F3)), Octonion::e2(F3), 3);
    CHECK(cmp.match);
    CHECK(cmp.enumeration.solution_count == 0);
    CHECK(cmp.flat_dim == -1);
}

TEST_CASE("tampered flats are caught with a witness") {
    MonomialTree w = ax_tree(Octonion::u(1, F3));
    Octonion c = Octonion::u(1, F3);
    AffineFlat good = solve_monomial(w, c).flat;
    REQUIRE(good.dim() == 4);

    // drop one direction
    std::vector<Octonion> fewer(good.basis().begin(), good.basis().end() - 1);
    AffineFlat tampered = AffineFlat::make(good.point(), fewer);
    OracleComparison cmp = compare_with_flat(w, c, 3, tampered);
    CHECK_FALSE(cmp.match);
    CHECK(cmp.first_discrepancy.has_value());

    // shift the point off the solution set
    AffineFlat shifted = AffineFlat::make(good.point() + Octonion::u(2, F3), good.basis());
    OracleComparison cmp2 = compare_with_flat(w, c, 3, shifted);
    CHECK_FALSE(cmp2.match);
}

TEST_CASE("field guards") {
    CHECK_THROWS_AS(enumerate_solutions(ax_tree(Octonion::u(1, Field::prime(7))),
                                        Octonion::zero(Field::prime(7)), 7),
                    FieldTooLarge);
    CHECK_THROWS_AS(enumerate_solutions(ax_tree(Octonion::u(1, F3)),
                                        Octonion::zero(Field::prime(5)), 5),
                    FieldMismatch);
}

TEST_CASE("theorem families against the brute force over F3") {
    Rng rng(99);
    for (Theorem thm : {Theorem::AXB, Theorem::ABX}) {
        for (const auto& id : family_case_ids(thm)) {
            Rng trial = Rng::substream(4242, static_cast<std::uint64_t>(id.size()) * 131 +
                                                 (thm == Theorem::AXB ? 0 : 1000) +
                                                 static_cast<std::uint64_t>(id[0]));
            PairParams params = draw_family_params(thm, id, trial, F3);
            SolutionFamily fam = make_family(thm, id, params, F3);
            std::map<int, Scalar> g;
            for (int i : fam.gamma_indices) g[i] = random_scalar(trial, F3);
            Octonion c = fam.c_of(g);
            MonomialTree w = thm == Theorem::AXB
                                 ? axb_tree(fam.a, fam.b)
                                 : MonomialTree::product(
                                       MonomialTree::constant("a1", fam.a),
                                       MonomialTree::product(MonomialTree::constant("a2", fam.b),
                                                             MonomialTree::variable()));
            OracleComparison cmp = compare_with_flat(w, c, 3, fam.solution_of(g));
            CAPTURE(id);
            REQUIRE(cmp.match);
            std::uint64_t expect = 1;
            for (std::size_t k = 0; k < fam.free_indices.size(); ++k) expect *= 3;
            REQUIRE(cmp.enumeration.solution_count == expect);
        }
    }
    (void)rng;
}
