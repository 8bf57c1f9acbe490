#include <doctest.h>

#include "octlin/g2.hpp"
#include "octlin/sampling.hpp"

using namespace octlin;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("unimodularity is enforced") {
    std::array<Scalar, 9> twice{};
    for (int i = 0; i < 9; ++i) twice[static_cast<std::size_t>(i)] = Scalar::zero(Q);
    twice[0] = twice[4] = twice[8] = Scalar::integer(2, Q);
    CHECK_THROWS_AS(SL3{twice}, NotUnimodular);
    CHECK_NOTHROW(SL3::diag(Scalar::integer(2, Q), Scalar::one(Q), Scalar::fraction(1, 2)));
}

TEST_CASE("pinned actions") {
    Rng rng(1);
    Octonion a = random_octonion(rng, Q);
    CHECK(SL3::identity(Q).act(a) == a);

    SL3 g = random_sl3(rng, Q);
    CHECK(g.act(Octonion::one(Q)) == Octonion::one(Q));

    SL3 d = SL3::diag(Scalar::integer(2, Q), Scalar::one(Q), Scalar::fraction(1, 2));
    CHECK(d.act(Octonion::u(1, Q)) == Scalar::integer(2, Q) * Octonion::u(1, Q));
    // multiplicativity through u1 v1 = e1
    CHECK(d.act(Octonion::u(1, Q)) * d.act(Octonion::v(1, Q)) == Octonion::e1(Q));
    CHECK(d.act(Octonion::v(1, Q)) == Scalar::fraction(1, 2) * Octonion::v(1, Q));
}

TEST_CASE("the action is an automorphism preserving norm, trace and the form") {
    Rng rng(2);
    for (int t = 0; t < 500; ++t) {
        SL3 g = random_sl3(rng, Q, 3, 4);
        Octonion a = random_octonion(rng, Q, 6), b = random_octonion(rng, Q, 6);
        REQUIRE(g.act(a * b) == g.act(a) * g.act(b));
        REQUIRE(g.act(a).norm() == a.norm());
        REQUIRE(g.act(a).trace() == a.trace());
        REQUIRE(qform(g.act(a), g.act(b)) == qform(a, b));
        REQUIRE(g.act(a).conj() == g.act(a.conj()));
    }
}

TEST_CASE("composition acts as iterated action") {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        SL3 g = random_sl3(rng, Q, 3, 4), h = random_sl3(rng, Q, 3, 4);
        Octonion a = random_octonion(rng, Q, 6);
        REQUIRE((g * h).act(a) == g.act(h.act(a)));
    }
}

TEST_CASE("matrix text form") {
    SL3 g = SL3::parse("1,0,0;0,1,0;0,0,1", Q);
    CHECK(g.act(Octonion::u(2, Q)) == Octonion::u(2, Q));
    CHECK_THROWS_AS(SL3::parse("2,0,0;0,1,0;0,0,1", Q), NotUnimodular);
    CHECK_THROWS_AS(SL3::parse("1,0;0,1", Q), SyntaxError);
    SL3 shear = SL3::parse("1,3/2,0;0,1,0;0,0,1", Q);
    CHECK(shear.act(Octonion::u(2, Q)) ==
          Scalar::fraction(3, 2) * Octonion::u(1, Q) + Octonion::u(2, Q));
}

TEST_CASE("torus limits on pinned tuples") {
    Octonion u1u2 = Octonion::u(1, Q) + Octonion::u(2, Q);
    auto lim = torus_limit({u1u2});
    REQUIRE(lim.has_value());
    CHECK(lim->front() == Octonion::u(2, Q));

    auto fixed = torus_limit({Octonion::e1(Q)});
    REQUIRE(fixed.has_value());
    CHECK(fixed->front() == Octonion::e1(Q));

    CHECK_FALSE(torus_limit({Octonion::u(3, Q)}).has_value());
    CHECK_FALSE(torus_limit({Octonion::v(1, Q)}).has_value());
}

TEST_CASE("torus limits preserve norms and traces coordinatewise") {
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        // draw inside the locus where the limit exists: u3 = v1 = 0
        std::array<Scalar, 8> c{};
        for (int k = 0; k < 8; ++k) c[static_cast<std::size_t>(k)] = random_scalar(rng, Q, 6);
        c[3] = Scalar::zero(Q);
        c[4] = Scalar::zero(Q);
        Octonion a = Octonion::from_coords(c);
        auto lim = torus_limit({a});
        REQUIRE(lim.has_value());
        REQUIRE(lim->front().norm() == a.norm());
        REQUIRE(lim->front().trace() == a.trace());
    }
}

TEST_CASE("degeneration curve record") {
    auto curve = torus_degeneration({Octonion::u(1, Q), Octonion::e2(Q)});
    REQUIRE(curve.has_value());
    CHECK(curve->base.size() == 2);
    CHECK(curve->limit[0].is_zero()); // u1 dies under the chosen torus
    CHECK(curve->limit[1] == Octonion::e2(Q));
}
