#include <doctest.h>

#include "octlin/eqparse.hpp"
#include "octlin/sampling.hpp"
#include "octlin/solver.hpp"

using namespace octlin;

namespace {

const Field Q = Field::rationals();

EquationSource src(const std::string& text) {
    EquationSource s;
    s.text = text;
    s.field = Q;
    s.bindings = {{"a", Octonion::u(1, Q)},
                  {"b", Octonion::v(2, Q)},
                  {"c", Octonion::u(1, Q)},
                  {"zeroc", Octonion::zero(Q)}};
    return s;
}

} // namespace

TEST_CASE("basic shapes parse") {
    auto [lhs, rhs] = parse_equation(src("(a*x)*b = c"));
    CHECK(lhs.is_product());
    CHECK(lhs.right().is_constant());
    CHECK(lhs.left().is_product());
    CHECK(lhs.left().left().constant_name() == "a");
    CHECK(lhs.left().right().is_variable());
    CHECK(rhs == Octonion::u(1, Q));

    auto [single, c2] = parse_equation(src("a*x = c"));
    CHECK(single.is_product());
    CHECK(single.left().is_constant());
    CHECK(single.right().is_variable());
    CHECK(c2 == Octonion::u(1, Q));

    auto [bare, c3] = parse_equation(src("x = c"));
    CHECK(bare.is_variable());
    CHECK(c3 == Octonion::u(1, Q));

    // the right side may be a constant product
    auto [l4, r4] = parse_equation(src("x = (a*b)"));
    CHECK(l4.is_variable());
    CHECK(r4 == Octonion::u(1, Q) * Octonion::v(2, Q));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_equation(src("a*(x*b = c")), SyntaxError);
    CHECK_THROWS_AS(parse_equation(src("a*x*b = c")), SyntaxError);
    CHECK_THROWS_AS(parse_equation(src("a*x")), SyntaxError);
    CHECK_THROWS_AS(parse_equation(src("(d*x)*b = c")), UnboundIdentifier);
    CHECK_THROWS_AS(parse_equation(src("(x*x)*b = c")), MultipleVariables);
    CHECK_THROWS_AS(parse_equation(src("x = x")), MultipleVariables);
    CHECK_THROWS_AS(parse_equation(src("a*b = c")), NoVariable);
    CHECK_THROWS_AS(parse_equation(src("(zeroc*x)*b = c")), ZeroCoefficient);
    CHECK_THROWS_AS(parse_equation(src("a*x = c extra")), SyntaxError);

    try {
        parse_equation(src("a*(x*b = c"));
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 2); // the unmatched '('
    }
}

TEST_CASE("printing") {
    auto [axb, r1] = parse_equation(src("(a*x)*b = c"));
    (void)r1;
    CHECK(axb.format() == "(a*x)*b");
    auto [ax, r2] = parse_equation(src("a*x = c"));
    (void)r2;
    CHECK(ax.format() == "a*x");
}

TEST_CASE("round trip over random trees") {
    Rng rng(77);
    for (int t = 0; t < 1000; ++t) {
        int m = 1 + static_cast<int>(rng.below(6));
        MonomialTree tree = random_monomial_tree(
            rng, m, [](Rng& r) { return random_nonzero_octonion(r, Q, 5); });
        std::string text = tree.format() + " = c";
        EquationSource s;
        s.text = text;
        s.field = Q;
        s.bindings["c"] = Octonion::zero(Q);
        int idx = 0;
        for (const auto& value : tree.constant_leaves())
            s.bindings["a" + std::to_string(++idx)] = value;
        auto [reparsed, rhs] = parse_equation(s);
        (void)rhs;
        REQUIRE(reparsed.structurally_equal(tree));
        REQUIRE(reparsed.format() == tree.format());
    }
}

TEST_CASE("parenthesization is meaningful: re-association changes the solution set") {
    Field f3 = Field::prime(3);
    EquationSource s;
    s.field = f3;
    s.bindings = {{"a", Octonion::u(1, f3)}, {"b", Octonion::u(2, f3)},
                  {"c", Octonion::zero(f3)}};

    s.text = "a*(b*x) = c";
    auto [nested, c1] = parse_equation(s);
    s.text = "(a*b)*x = c";
    auto [flat_assoc, c2] = parse_equation(s);

    CHECK_FALSE(nested.structurally_equal(flat_assoc));
    AffineFlat left = solve_monomial(nested, c1).flat;
    AffineFlat right = solve_monomial(flat_assoc, c2).flat;
    CHECK(left.dim() == 6);
    CHECK(right.dim() == 4);
    CHECK(left != right);
}
