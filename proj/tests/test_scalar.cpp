#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vwref/errors.hpp"
#include "vwref/parse.hpp"
#include "vwref/ratfunc.hpp"

#include <random>

using namespace vw;

namespace {

RatFunc random_ratfunc(std::mt19937& rng, bool with_params = true) {
    std::uniform_int_distribution<int> ex(-4, 4), co(-5, 5), pick(0, 3);
    HalfLaurent num;
    for (int i = 0; i < 4; ++i) {
        ParamPoly c(Rat(co(rng)));
        if (with_params && pick(rng) == 0) c = c * ParamPoly::symbol("g");
        num.add_term(ex(rng), c);
    }
    HalfLaurent den(Rat(1));
    switch (pick(rng)) {
    case 0: den = HalfLaurent(Rat(1)) + HalfLaurent::s_power(2); break;
    case 1: den = HalfLaurent(Rat(2)) - HalfLaurent::s_power(1); break;
    default: break;
    }
    return RatFunc(num, den);
}

} // namespace

TEST_CASE("parameter polynomials") {
    ParamPoly g = ParamPoly::symbol("g");
    ParamPoly c2 = ParamPoly::symbol("c2");
    CHECK((g - g).is_zero());
    CHECK((g * c2) == (c2 * g));
    CHECK(((g + c2) * (g - c2)) == (g * g - c2 * c2));
    CHECK((g + ParamPoly(Rat(1))).str() == "1 + g");
    CHECK((ParamPoly(Rat(2)) - g * Rat(2)).str() == "2 - 2*g");
    CHECK_THROWS_AS(ParamPoly::symbol("undeclared_thing"), UndeclaredParameter);
    CHECK(g.substitute({{"g", Rat(3)}}).constant_value() == 3);
    CHECK((g * g * c2).evaluate({{"g", Rat(2)}, {"c2", Rat(5)}}) == 20);
}

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(1) == RatFunc(1));
    CHECK(quantum_integer(0).is_zero());
    CHECK(quantum_integer(-3) == -quantum_integer(3));
    // [3] = t^-1 + 1 + t
    CHECK(quantum_integer(3) ==
          RatFunc::s_power(-2) + RatFunc(1) + RatFunc::s_power(2));
    // [2] = t^-1/2 + t^1/2
    CHECK(quantum_integer(2) == RatFunc::s_power(-1) + RatFunc::s_power(1));
    CHECK(quantum_integer(3).str() == "s^-2 * (1 + s^2 + s^4)");
    for (long n = -50; n <= 50; ++n) {
        CHECK(is_bar_symmetric(quantum_integer(n)));
        CHECK(eval_at_t1(quantum_integer(n)) == ParamPoly(Rat(n)));
    }
}

TEST_CASE("bar involution") {
    CHECK(bar(RatFunc::s_power(2)) == RatFunc::s_power(-2));
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        RatFunc f = random_ratfunc(rng);
        CHECK(bar(bar(f)) == f);
        RatFunc h = random_ratfunc(rng);
        CHECK(bar(f * h) == bar(f) * bar(h));
        CHECK(bar(f + h) == bar(f) + bar(h));
    }
    RatFunc f = parse_ratfunc("(2 - 2*g) / (s + s^-1)");
    CHECK(bar(f) == f);
}

TEST_CASE("evaluation at t=1") {
    // removable singularity
    RatFunc f(HalfLaurent(Rat(1)) - HalfLaurent::s_power(4),
              HalfLaurent(Rat(1)) - HalfLaurent::s_power(2));
    CHECK(eval_at_t1(f).constant_value() == 2);
    CHECK(eval_at_t1(quantum_integer(7)).constant_value() == 7);
    // (-1)^2 / [2]_1^2 = 1/4
    RatFunc zero_p2 = RatFunc(1) / quantum_integer(2).pow(2);
    CHECK(eval_at_t1(zero_p2).constant_value() == Rat(1, 4));
    CHECK_THROWS_AS(eval_at_t1(RatFunc(1) / (RatFunc(1) - RatFunc::s_power(2))), PoleAtOne);
}

TEST_CASE("substitution t -> t^r") {
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        RatFunc f = random_ratfunc(rng);
        CHECK(substitute_tr(f, 1) == f);
    }
    for (long c = 1; c <= 12; ++c) {
        for (int r = 1; r <= 12; ++r)
            CHECK(substitute_tr(quantum_integer(c), r) * quantum_integer(r) ==
                  quantum_integer(c * r));
        CHECK(substitute_tr(quantum_integer(c), 2) ==
              quantum_integer(2 * c) / quantum_integer(2));
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(23);
    for (int i = 0; i < 30; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero() && b.num().is_constant_coeffs()) {
            RatFunc q = a / b;
            CHECK(q * b == a);
        }
    }
}

TEST_CASE("canonical form") {
    // same value, different presentations
    HalfLaurent n1 = HalfLaurent::s_power(1) + HalfLaurent::s_power(3);
    HalfLaurent d1 = HalfLaurent::s_power(2) + HalfLaurent::s_power(4);
    RatFunc a(n1, d1);                      // (s + s^3)/(s^2 + s^4) = 1/s
    CHECK(a == RatFunc::s_power(-1));
    // scaling of the denominator does not matter
    RatFunc b(n1.scaled(Rat(3)), d1.scaled(Rat(3)));
    CHECK(a == b);
    // rebuilding from the canonical parts is the identity
    RatFunc c(a.num(), a.den());
    CHECK(c == a);
    CHECK(c.str() == a.str());
    // denominators keep integer content 1 and positive leading coefficient
    RatFunc d(HalfLaurent(Rat(1)), HalfLaurent(Rat(-2)) + HalfLaurent::s_power(1).scaled(Rat(-4)));
    CHECK(d.den().coeff(d.den().highest_exp()).constant_value() > 0);
    CHECK(d.den().coeff(0).constant_value() == 1);  // content reduced: 2 + 4s -> 1 + 2s
    CHECK_THROWS_AS(RatFunc(HalfLaurent(Rat(1)), HalfLaurent()), CalcError);
}

TEST_CASE("parameters never reach denominators") {
    RatFunc g = RatFunc::symbol("g");
    CHECK_THROWS_AS(RatFunc(1) / g, ParamDenominator);
    CHECK_THROWS_AS(g / (g + RatFunc(1)), ParamDenominator);
    // parameter-free numerators divide fine
    CHECK((g / RatFunc(2)) * RatFunc(2) == g);
}

TEST_CASE("canonical string round-trip") {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        RatFunc f = random_ratfunc(rng);
        RatFunc re = parse_ratfunc(f.str());
        CHECK(re == f);
        CHECK(re.str() == f.str());
    }
    CHECK(parse_ratfunc("s^1 * (2 - 2*g) / (1 + s^2)").str() == "s^1 * (2 - 2*g) / (1 + s^2)");
    CHECK(parse_ratfunc("0").is_zero());
}

TEST_CASE("pole locations and origin valuation") {
    RatFunc f = RatFunc(-1) / quantum_integer(2).pow(3);
    CHECK(denominator_is_cyclotomic(f));
    CHECK(origin_valuation(f) == 3);
    CHECK(origin_valuation(quantum_integer(3)) == -2);
    // a denominator with a root off the unit circle is flagged
    RatFunc bad(HalfLaurent(Rat(1)), HalfLaurent(Rat(2)) - HalfLaurent::s_power(1));
    CHECK_FALSE(denominator_is_cyclotomic(bad));
}

TEST_CASE("integer binding expressions") {
    Bindings b{{"P2", 3}};
    CHECK(eval_integer(parse_expression("4-3*P2"), b) == -5);
    CHECK(eval_integer(parse_expression("2*(P2+1)"), b) == 8);
    CHECK_THROWS_AS(eval_integer(parse_expression("missing"), b), MissingBinding);
    CHECK(parse_ratfunc("(-(s + s^-1))^P2", b) == -quantum_integer(2).pow(3));
}
