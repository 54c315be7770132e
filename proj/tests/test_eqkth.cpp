#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vwref/eqkth.hpp"
#include "vwref/errors.hpp"

#include <random>

using namespace vw;

namespace {

const ParamPoly g_sym = ParamPoly::symbol("g");

EqKClass random_class(const RingPtr& ring, std::mt19937& rng, bool nonzero_weights) {
    std::uniform_int_distribution<int> w(-3, 3), co(-2, 2), n(1, 4), kindd(0, 2), sgn(0, 1);
    EqKClass out(ring);
    int count = n(rng);
    for (int i = 0; i < count; ++i) {
        int weight = w(rng);
        if (nonzero_weights && weight == 0) weight = 1;
        int sign = sgn(rng) ? 1 : -1;
        switch (kindd(rng)) {
        case 0: {
            CohClass c1(ring);
            for (int j = 0; j < ring->dim(); ++j)
                if (ring->degree(j) == 2) c1.set_coeff(j, RatFunc(Rat(co(rng))));
            out.add(Atom::line(c1, weight, sign));
            break;
        }
        case 1: {
            if (ring->complex_dim() < 2) {
                out.add(Atom::trivial(ring, weight, sign));
                break;
            }
            CohClass ch = ring->scalar(RatFunc(2));
            CohClass det(ring);
            for (int j = 0; j < ring->dim(); ++j) {
                if (ring->degree(j) == 2) {
                    ch.set_coeff(j, RatFunc(Rat(co(rng))));
                    det.set_coeff(j, RatFunc(Rat(co(rng))));
                }
                if (ring->degree(j) == 4) ch.set_coeff(j, RatFunc(Rat(co(rng))));
            }
            out.add(Atom::rank2(ch, det, weight, sign));
            break;
        }
        default:
            out.add(Atom::trivial(ring, weight, sign));
        }
    }
    return out;
}

} // namespace

TEST_CASE("Chern characters of atoms") {
    RingPtr cur = CohRing::curve(g_sym);
    CohClass k = cur->basis_class(1);
    EqKClass triv(cur, {Atom::trivial(cur, 2)});
    CHECK(ch(triv) == cur->scalar(RatFunc::s_power(2)));
    EqKClass line(cur, {Atom::line(-k, -2)});
    CHECK(ch(line) == (cur->unit() - k) * RatFunc::s_power(-2));
    // additivity over signs
    EqKClass both = triv + (-line);
    CHECK(ch(both) == ch(triv) - ch(line));
}

TEST_CASE("exterior algebra classes") {
    RingPtr pt = CohRing::point();
    CHECK(lambda_minus_one(EqKClass(pt)) == pt->unit());
    EqKClass one_triv(pt, {Atom::trivial(pt, -4)});
    CHECK(lambda_minus_one(one_triv) == pt->scalar(RatFunc(1) - RatFunc::s_power(-4)));

    // rank-2 cotangent-type atom on a surface
    RingPtr surf = CohRing::surface(g_sym);
    CohClass chOm = parse_cohclass("2 + kappa + ((g-1)/2 - c2)*pt", surf);
    CohClass kap = surf->basis_class(1);
    EqKClass om(surf, {Atom::rank2(chOm, kap, 4)});
    CHECK(lambda_minus_one(om) ==
          surf->unit() - chOm * RatFunc::s_power(4) + exp_class(kap) * RatFunc::s_power(8));

    // multiplicativity over sums
    std::mt19937 rng(13);
    for (int i = 0; i < 20; ++i) {
        EqKClass x = random_class(surf, rng, true), y = random_class(surf, rng, true);
        CHECK(lambda_minus_one(x + y) == lambda_minus_one(x) * lambda_minus_one(y));
    }
    CHECK_THROWS_AS(lambda_minus_one(EqKClass(pt, {Atom::trivial(pt, 0, -1)})),
                    ZeroWeightDenominator);
}

TEST_CASE("duals") {
    RingPtr surf = CohRing::surface(g_sym);
    std::mt19937 rng(17);
    for (int i = 0; i < 20; ++i) {
        EqKClass x = random_class(surf, rng, false);
        CHECK(dual(dual(x)) == x);
        // ch(dual x) is ch(x) with s -> 1/s and degree-2 parts negated
        CohClass cx = ch(x), cd = ch(dual(x));
        for (int j = 0; j < surf->dim(); ++j) {
            RatFunc expect = bar(cx.coeff(j));
            if (surf->degree(j) == 2) expect = -expect;
            CHECK(cd.coeff(j) == expect);
        }
    }
    // paired line duals appear with inverted determinant and weight
    CohClass kap = surf->basis_class(1);
    Atom a = Atom::line(kap * RatFunc(2), 2);
    Atom d = a.dual();
    CHECK(d.c1 == -(kap * RatFunc(2)));
    CHECK(d.weight == -2);
}

TEST_CASE("duality identity for single atoms") {
    // ch(Lambda(dual E)) = (-1)^rk(E) ch(Lambda(E)) ch(det(E)^*) exactly
    RingPtr surf = CohRing::surface(g_sym);
    CohClass kap = surf->basis_class(1);
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> w(1, 3), co(-2, 2);
    for (int i = 0; i < 15; ++i) {
        std::vector<Atom> atoms = {
            Atom::line(kap * RatFunc(Rat(co(rng))), 2 * w(rng)),
            Atom::rank2(parse_cohclass("2 + kappa + c2*pt", surf), kap, 2 * w(rng)),
            Atom::trivial(surf, 2 * w(rng))};
        for (const Atom& a : atoms) {
            EqKClass e(surf, {a});
            EqKClass ed(surf, {a.dual()});
            CohClass lhs = lambda_minus_one(ed);
            // ch(det(E)^*) = s^(-rank*weight) exp(-det_c1)
            CohClass detdual =
                exp_class(-a.det_c1()) * RatFunc::s_power(-a.rank() * a.weight);
            CohClass rhs = lambda_minus_one(e) * detdual;
            if (a.rank() % 2 != 0) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("canonical square roots") {
    RingPtr surf = CohRing::surface(g_sym);
    CohClass kap = surf->basis_class(1);

    SUBCASE("empty input") {
        SqrtKvir r = sqrt_Kvir(EqKClass(surf));
        CHECK(r.det_c1.is_zero());
        CHECK(r.s_exponent == 0);
    }

    SUBCASE("shifted cotangent of a curve") {
        RingPtr cur = CohRing::curve(g_sym);
        CohClass k = cur->basis_class(1);
        // cotangent restriction Omega_F at weight 0 plus its shifted partner
        EqKClass edot(cur, {Atom::line(k, 0), Atom::line(-k, -2, -1)});
        SqrtKvir r = sqrt_Kvir(edot);
        CHECK(r.det_c1 == k);
        CHECK(r.s_exponent == 1);
    }

    SUBCASE("length-1 component of the rank-2 general-type moduli space") {
        for (long P2 = 0; P2 <= 3; ++P2) {
            EqKClass edot(surf);
            CohClass chOm = parse_cohclass("2 + kappa + ((g-1)/2 - c2)*pt", surf);
            edot.add(Atom::rank2(chOm, kap, 0));                    // cotangent of the surface
            edot.add(Atom::line(kap, 0, -1));                       // obstruction dual
            edot.add(Atom::line(-kap, -2));                         // from the normal directions
            for (long i = 0; i < P2; ++i) edot.add(Atom::trivial(surf, -4));
            edot.add(Atom::line(-kap * RatFunc(2), -4, -1));
            for (long i = 0; i < P2; ++i) edot.add(Atom::trivial(surf, 2, -1));
            edot.add(Atom::line(kap * RatFunc(2), 2));
            CohClass chT = parse_cohclass("2 - kappa + ((g-1)/2 - c2)*pt", surf);
            edot.add(Atom::rank2(chT, -kap, -2, -1));
            SqrtKvir r = sqrt_Kvir(edot);
            CHECK(r.det_c1 == kap * RatFunc(2));
            CHECK(r.s_exponent == 4 - 3 * P2);
        }
    }

    SUBCASE("squares to the determinant on symmetric inputs") {
        std::mt19937 rng(29);
        for (int i = 0; i < 20; ++i) {
            EqKClass raw = random_class(surf, rng, false);
            // honest T-representations carry even s-exponents only
            EqKClass half(surf);
            for (Atom a : raw.atoms()) {
                a.weight *= 2;
                half.add(a);
            }
            EqKClass sym = half;
            for (const Atom& a : half.atoms()) {
                Atom partner = a.dual();
                partner.weight = -a.weight - 2;
                partner.sign = -a.sign;
                sym.add(partner);
            }
            auto [detc1, detexp] = det_line(sym);
            SqrtKvir r = sqrt_Kvir(sym);
            CHECK(r.det_c1 * RatFunc(2) == detc1);
            CHECK(2 * r.s_exponent == detexp);
        }
    }
}
