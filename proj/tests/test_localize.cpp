#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vwref/errors.hpp"
#include "vwref/localize.hpp"
#include "vwref/scenario.hpp"

using namespace vw;

namespace {

const ParamPoly g_sym = ParamPoly::symbol("g");

FixedLocusData scenario_data(const std::string& name, long P2) {
    return build_localize_data(ScenarioRegistry::instance().get(name), {{"P2", P2}});
}

} // namespace

TEST_CASE("length-0 horizontal component") {
    for (long P2 = 0; P2 <= 3; ++P2) {
        FixedLocusData d = scenario_data("gt_horizontal_n0", P2);
        RatFunc val = chi_t(d);
        RatFunc expect = RatFunc(P2 % 2 ? -1 : 1) / quantum_integer(2).pow(P2);
        CHECK(val == expect);
        CHECK(check_symmetry(val));
        CHECK(euler_oracle(d) == eval_at_t1(val));
    }
    // spec'd point value
    CHECK(chi_t(scenario_data("gt_horizontal_n0", 1)) ==
          RatFunc(-1) / (RatFunc::s_power(1) + RatFunc::s_power(-1)));
}

TEST_CASE("length-1 horizontal component") {
    RatFunc chi = parse_ratfunc("2 - 2*g");
    for (long P2 = 0; P2 <= 3; ++P2) {
        FixedLocusData d = scenario_data("gt_horizontal_n1", P2);
        RatFunc val = chi_t(d);
        CHECK(val == RatFunc(P2 % 2 ? -1 : 1) * chi / quantum_integer(2).pow(P2));
        CHECK(check_symmetry(val));
        CHECK(euler_oracle(d) == eval_at_t1(val));
        CHECK(denominator_is_cyclotomic(val));
    }
}

TEST_CASE("length-2 horizontal component") {
    RatFunc chi = parse_ratfunc("2 - 2*g");
    RatFunc mid = parse_ratfunc("2*s^2 + 5 + 2*s^-2");
    for (long P2 = 0; P2 <= 3; ++P2) {
        FixedLocusData d = scenario_data("gt_horizontal_n2", P2);
        RatFunc val = chi_t(d);
        RatFunc expect = RatFunc(P2 % 2 ? -1 : 1) * (chi * chi + mid * chi) /
                         (RatFunc(2) * quantum_integer(2).pow(P2));
        CHECK(val == expect);
        CHECK(check_symmetry(val));
        CHECK(euler_oracle(d) == eval_at_t1(val));
    }
}

TEST_CASE("length-2 vertical component") {
    for (long P2 = 0; P2 <= 3; ++P2) {
        Bindings b{{"P2", P2}};
        FixedLocusData d = scenario_data("gt_vertical_n2", P2);
        RatFunc val = chi_t(d);
        RatFunc expect = parse_ratfunc(
            "((s^-4 + 12*s^-2 + 46 + 12*s^2 + s^4)*(g-1) + (s^-4 + 10 + s^4)*c2)"
            " / (12 * (-(s + s^-1))^P2)",
            b);
        CHECK(val == expect);
        CHECK(check_symmetry(val));
        CHECK(eval_at_t1(val) == eval_at_t1(parse_ratfunc("(6*(g-1) + c2) / (-2)^P2", b)));
        // the rank-2 atom rules out the cohomological oracle
        CHECK_THROWS_AS(euler_oracle(d), NonLineAtom);
    }
}

TEST_CASE("shifted cotangent of the projective line") {
    FixedLocusData d =
        build_localize_data(ScenarioRegistry::instance().get("shifted_cotangent_P1"), {});
    RatFunc val = chi_t(d);
    CHECK(val == -quantum_integer(2));
    // -t^(-1/2) (1 + t) with 1 + t the Hodge-theoretic genus of the line
    RatFunc hodge_p1 = RatFunc(1) + RatFunc::s_power(2);
    CHECK(val == -RatFunc::s_power(-1) * hodge_p1);
    CHECK(euler_oracle(d) == ParamPoly(Rat(-2)));
    CHECK(check_symmetry(val));
}

TEST_CASE("linearity and scaling") {
    FixedLocusData d = scenario_data("gt_horizontal_n1", 2);
    RatFunc base = chi_t(d);

    FixedLocusData scaled = d;
    scaled.prefactor = d.prefactor * parse_ratfunc("3 - s^2");
    CHECK(chi_t(scaled) == base * parse_ratfunc("3 - s^2"));

    // doubling the numerator atoms doubles the integral
    FixedLocusData doubled = d;
    doubled.numerator = d.numerator + d.numerator;
    CHECK(chi_t(doubled) == base * RatFunc(2));
}

TEST_CASE("input validation") {
    RingPtr pt = CohRing::point();
    FixedLocusData d;
    d.base = pt;
    d.numerator = EqKClass(pt, {Atom::trivial(pt, 0)});
    d.nvir = EqKClass(pt, {Atom::trivial(pt, 0)});   // fixed direction left in
    d.tangent_ch = pt->zero();
    CHECK_THROWS_AS(chi_t(d), ZeroWeightDenominator);

    // mismatched rank in the normal bundle leaves tau behind
    FixedLocusData bad;
    RingPtr cur = CohRing::curve(g_sym);
    bad.base = cur;
    bad.numerator = EqKClass(cur, {Atom::trivial(cur, 0)});
    bad.nvir = EqKClass(
        cur, {Atom::line(cur->basis_class(1), 2, -1), Atom::trivial(cur, 2, -1)});
    bad.tangent_ch = cur->zero();
    CHECK_THROWS_AS(euler_oracle(bad), ResidualTau);
}

TEST_CASE("empty normal bundle integrates the numerator") {
    RingPtr pt = CohRing::point();
    FixedLocusData d;
    d.base = pt;
    d.numerator = EqKClass(pt, {Atom::trivial(pt, 0)});
    d.nvir = EqKClass(pt);
    d.tangent_ch = pt->zero();
    CHECK(chi_t(d) == RatFunc(1));
    CHECK(euler_oracle(d) == ParamPoly(Rat(1)));
}
