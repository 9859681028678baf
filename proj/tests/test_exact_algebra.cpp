#include <doctest.h>

#include <random>
#include <sstream>

#include "arcinv/errors.hpp"
#include "arcinv/polynomial.hpp"
#include "arcinv/rational.hpp"
#include "arcinv/univariate.hpp"
#include "helpers.hpp"

using namespace arcinv;
using testing::poly;

TEST_SUITE("exact_algebra") {

TEST_CASE("rationals stay reduced") {
    const Rational a(Integer(6), Integer(-4));
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.to_string() == "-3/2");
    CHECK(Rational(Integer(4), Integer(2)).is_integer());
    CHECK(Rational::parse("14/13") == Rational(Integer(14), Integer(13)));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), PreconditionError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational(0).reciprocal(), PreconditionError);
}

TEST_CASE("floor rounds toward minus infinity") {
    CHECK(Rational(Integer(7), Integer(2)).floor() == 3);
    CHECK(Rational(Integer(-7), Integer(2)).floor() == -4);
    CHECK(Rational(-4).floor() == -4);
}

TEST_CASE("arithmetic agrees with integer cross-multiplication") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const long a = static_cast<long>(rng() % 41) - 20, b = 1 + static_cast<long>(rng() % 12);
        const long c = static_cast<long>(rng() % 41) - 20, d = 1 + static_cast<long>(rng() % 12);
        const Rational x{Integer(a), Integer(b)}, y{Integer(c), Integer(d)};
        CHECK((x + y) == Rational(Integer(a * d + b * c), Integer(b * d)));
        CHECK((x * y) == Rational(Integer(a * c), Integer(b * d)));
        CHECK(((x < y) == (a * d < c * b)));
        if (c != 0) CHECK((x / y) == Rational(Integer(a * d), Integer(b * c)));
    }
}

TEST_CASE("extended numbers put infinity on top") {
    const ExtRational inf = ExtRational::infinity();
    CHECK(ExtRational(Rational(1000)) < inf);
    CHECK(inf == ExtRational::infinity());
    CHECK(min(inf, ExtRational(Rational(3))) == ExtRational(Rational(3)));
    CHECK(to_string(inf) == "inf");
    CHECK(parse_ext_rational("inf").is_infinite());
    CHECK(parse_ext_rational("6/5") == ExtRational(Rational(Integer(6), Integer(5))));
    CHECK((Order(2) + Order::infinity()).is_infinite());
    CHECK_THROWS(inf.value());
}

TEST_CASE("univariate division and gcd") {
    const UPoly a{Rational(-1), Rational(0), Rational(1)};  // t^2 - 1
    const UPoly b{Rational(1), Rational(1)};                // t + 1
    auto [qt, r] = divmod(a, b);
    CHECK(qt == UPoly{Rational(-1), Rational(1)});
    CHECK(r.is_zero());
    CHECK(gcd(a * UPoly{Rational(2), Rational(1)}, b * UPoly{Rational(2), Rational(1)}) ==
          UPoly{Rational(2), Rational(3), Rational(1)});
    CHECK_THROWS_AS(divmod(a, UPoly()), PreconditionError);
    CHECK(UPoly::monomial(Rational(3), 4).order() == Order(4));
    CHECK(UPoly().order().is_infinite());
    CHECK(b.substitute_power(3) == UPoly{Rational(1), Rational(0), Rational(0), Rational(1)});
    CHECK_THROWS_AS(b.shifted_down(1), InvariantError);
}

TEST_CASE("rational functions are canonical power series") {
    const UPoly one_minus_t{Rational(1), Rational(-1)};
    const RationalFunctionT f(UPoly::monomial(Rational(2), 3) * one_minus_t, one_minus_t * one_minus_t);
    CHECK(f.den().leading() == Rational(1));
    CHECK(f.num().degree() == 3);
    CHECK(t_order(f) == Order(3));
    CHECK(RationalFunctionT(UPoly{Rational(0), Rational(2)}, UPoly{Rational(0), Rational(4)}) ==
          RationalFunctionT(Rational(Integer(1), Integer(2))));
    // 1/t is not a power series.
    CHECK_THROWS_AS(RationalFunctionT(Rational(1)) / RationalFunctionT::t_power(1), PreconditionError);
    CHECK_THROWS_AS(RationalFunctionT(UPoly(Rational(1)), UPoly{Rational(0), Rational(1)}), PreconditionError);
    const RationalFunctionT g = RationalFunctionT::t_power(2) / RationalFunctionT(one_minus_t);
    CHECK(g.value_at_zero().is_zero());
    CHECK(t_order(g.ramify(3)) == Order(6));
    CHECK((g - g).is_zero());
    CHECK(t_order(RationalFunctionT()).is_infinite());
}

TEST_CASE("translation agrees with evaluation") {
    std::mt19937_64 rng(11);
    auto small = [&]() { return Rational(Integer(static_cast<long>(rng() % 9) - 4), Integer(1 + static_cast<long>(rng() % 3))); };
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial p({"x", "y", "z"});
        for (int k = 0; k < 5; ++k)
            p.add_term({static_cast<std::uint32_t>(rng() % 4), static_cast<std::uint32_t>(rng() % 4),
                        static_cast<std::uint32_t>(rng() % 3)},
                       small());
        const std::vector<Rational> a{small(), small(), small()};
        const Polynomial shifted = translate(p, a);
        for (int s = 0; s < 3; ++s) {
            const std::vector<Rational> y{small(), small(), small()};
            const std::vector<Rational> ya{y[0] + a[0], y[1] + a[1], y[2] + a[2]};
            CHECK(shifted.evaluate(y) == p.evaluate(ya));
        }
    }
}

TEST_CASE("partial derivatives") {
    const Polynomial f = poly({"x", "y", "z"}, {{{2, 3, 0}, Rational(1)}, {{0, 0, 6}, Rational(-1)}});
    CHECK(partial_derivative(f, 0) == poly({"x", "y", "z"}, {{{1, 3, 0}, Rational(2)}}));
    CHECK(partial_derivative(f, 2) == poly({"x", "y", "z"}, {{{0, 0, 5}, Rational(-6)}}));
    CHECK(partial_derivative(partial_derivative(f, 0), 2).is_zero());
    CHECK_THROWS_AS(partial_derivative(f, 3), PreconditionError);
    CHECK(order_at_origin(f) == Order(5));
    CHECK(order_at_origin(Polynomial({"x"})).is_infinite());
}

TEST_CASE("composition agrees with pointwise evaluation") {
    const Polynomial p = poly({"x", "y"}, {{{2, 0}, Rational(3)}, {{1, 2}, Rational(-1)}, {{0, 3}, Rational(2)}});
    const UPoly one_minus_t{Rational(1), Rational(-1)};
    const std::vector<RationalFunctionT> comps{
        RationalFunctionT(UPoly::monomial(Rational(1), 2), one_minus_t),
        RationalFunctionT(UPoly{Rational(0), Rational(1), Rational(5)})};
    const RationalFunctionT c = compose(p, comps);
    for (long k = 2; k < 8; ++k) {
        const Rational t(Integer(1), Integer(k));
        const std::vector<Rational> point{comps[0].num().evaluate(t) / comps[0].den().evaluate(t),
                                          comps[1].num().evaluate(t) / comps[1].den().evaluate(t)};
        CHECK(c.num().evaluate(t) / c.den().evaluate(t) == p.evaluate(point));
    }
    CHECK(composition_order(p, comps) == t_order(c));
    CHECK(composition_order(p, comps) == Order(3));
    const Polynomial cusp = poly({"x", "y"}, {{{2, 0}, Rational(1)}, {{0, 3}, Rational(-1)}});
    const std::vector<RationalFunctionT> on{RationalFunctionT::t_power(3), RationalFunctionT::t_power(2)};
    CHECK(vanishes_along(cusp, on));
    CHECK(compose(cusp, on).is_zero());
}

TEST_CASE("polynomial printing and embedding") {
    const Polynomial f = poly({"x", "y"}, {{{2, 0}, Rational(1)}, {{0, 3}, Rational(-1)}});
    CHECK(f.to_string() == "-y^3 + x^2");
    const std::size_t pos[] = {0, 2};
    const Polynomial g = f.embedded({"x", "s", "y"}, pos);
    CHECK(g.degree_in(2) == 3);
    CHECK(!g.depends_on(1));
    CHECK_THROWS_AS(f + g, PreconditionError);
    CHECK(f.pow(2).total_degree() == 6);
    std::ostringstream os;
    os << Rational(Integer(-3), Integer(7));
    CHECK(os.str() == "-3/7");
}

}
