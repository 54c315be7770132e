// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (zero tolerance). Exit code 0 iff everything passes.

#include "vwref/lambdaring.hpp"
#include "vwref/scenario.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

using namespace vw;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (pass ? "PASS" : "FAIL") << " " << name << note << "  [" << ms << " ms]"
              << std::endl;
    if (!pass) ++g_failures;
}

RatFunc chi_of(const std::string& name, long P2) {
    return chi_t(build_localize_data(ScenarioRegistry::instance().get(name), {{"P2", P2}}));
}

RatFunc sign_pow(long P2) { return RatFunc(P2 % 2 ? -1 : 1); }

} // namespace

int main() {
    const RatFunc g = RatFunc::symbol("g");
    const RatFunc c2 = RatFunc::symbol("c2");
    const RatFunc chi = RatFunc(2) - RatFunc(2) * g;

    criterion("criterion-01 length-0 horizontal value, exact string match, P2 in 0..3", [&] {
        bool ok = true;
        for (long P2 = 0; P2 <= 3; ++P2) {
            RatFunc expect = sign_pow(P2) / quantum_integer(2).pow(P2);
            RunResult r = run_scenario("gt_horizontal_n0", {{"P2", P2}});
            ok = ok && r.result_canonical && *r.result_canonical == expect.str();
            ok = ok && r.golden_match && *r.golden_match && r.ok();
        }
        return ok;
    });

    criterion("criterion-02 length-1 horizontal value with symbolic genus, P2 in 0..3", [&] {
        bool ok = true;
        for (long P2 = 0; P2 <= 3; ++P2) {
            RatFunc expect = sign_pow(P2) * chi / quantum_integer(2).pow(P2);
            RunResult r = run_scenario("gt_horizontal_n1", {{"P2", P2}});
            ok = ok && r.result_canonical && *r.result_canonical == expect.str();
            ok = ok && r.golden_match && *r.golden_match && r.ok();
        }
        return ok;
    });

    criterion("criterion-03 length-2 horizontal value (chi^2 + (2t+5+2/t) chi)/2 shape", [&] {
        bool ok = true;
        RatFunc mid = parse_ratfunc("2*s^2 + 5 + 2*s^-2");
        for (long P2 = 0; P2 <= 3; ++P2) {
            RatFunc expect = sign_pow(P2) * (chi * chi + mid * chi) /
                             (RatFunc(2) * quantum_integer(2).pow(P2));
            ok = ok && (chi_of("gt_horizontal_n2", P2) == expect);
            ok = ok && run_scenario("gt_horizontal_n2", {{"P2", P2}}).ok();
        }
        return ok;
    });

    criterion("criterion-04 vertical length-2 value and its t=1 specialization", [&] {
        bool ok = true;
        for (long P2 = 0; P2 <= 3; ++P2) {
            Bindings b{{"P2", P2}};
            RatFunc expect = parse_ratfunc(
                "((s^-4 + 12*s^-2 + 46 + 12*s^2 + s^4)*(g-1) + (s^-4 + 10 + s^4)*c2)"
                " / (12 * (-(s + s^-1))^P2)",
                b);
            RatFunc val = chi_of("gt_vertical_n2", P2);
            ok = ok && (val == expect);
            ok = ok && (eval_at_t1(val) ==
                        eval_at_t1(parse_ratfunc("(6*(g-1) + c2) / (-2)^P2", b)));
        }
        return ok;
    });

    criterion("criterion-05 generating series through q^2 and its t=1 value", [&] {
        // The t=1 coefficient of q is (-2)^(-P2)(2-2g), forced by the q^1
        // series coefficient itself; see the decisions ledger for the sign
        // discrepancy in the source display.
        bool ok = true;
        for (long P2 = 0; P2 <= 3; ++P2) {
            QSeries s = gen_type_series(P2, 2);
            Bindings b{{"P2", P2}};
            RatFunc q2pow = quantum_integer(2).pow(P2);
            RatFunc gm1 = g - RatFunc(1);
            ok = ok && (s.coeff(0) == sign_pow(P2) / q2pow);
            ok = ok && (s.coeff(1) == sign_pow(P2) * chi / q2pow);
            RatFunc q2c = sign_pow(P2) / (RatFunc(12) * q2pow) *
                          (RatFunc(24) * gm1 * gm1 +
                           parse_ratfunc("s^-4 - 12*s^-2 - 14 - 12*s^2 + s^4") * gm1 +
                           parse_ratfunc("s^-4 + 10 + s^4") * c2);
            ok = ok && (s.coeff(2) == q2c);
            RatFunc half = RatFunc(1) / parse_ratfunc("(-2)^P2", b);
            ok = ok && (eval_at_t1(s.coeff(0)) == eval_at_t1(half));
            ok = ok && (eval_at_t1(s.coeff(1)) == eval_at_t1(half * chi));
            ok = ok && (eval_at_t1(s.coeff(2)) ==
                        eval_at_t1(half * (gm1 * (RatFunc(2) * g - RatFunc(5)) + c2)));
        }
        return ok && run_scenario("gt_series").ok();
    });

    criterion("criterion-06 rank-2 pairs on p_g > 0 surfaces invert to p_g/[2]^(p_g+1)", [&] {
        bool ok = true;
        for (long pg : {1L, 2L, 3L}) {
            for (long ch : {5L, 10L}) {
                RunResult r = run_scenario("pairs_pg", {{"p_g", pg}, {"chi", ch}});
                ok = ok && r.ok() && r.golden_match && *r.golden_match;
                RatFunc vw_expect = RatFunc(Rat(pg)) / quantum_integer(2).pow(pg + 1);
                ok = ok && r.result_canonical && (*r.result_canonical == vw_expect.str());
            }
        }
        return ok;
    });

    criterion("criterion-07 bar symmetry of every localization and series output", [&] {
        bool ok = true;
        for (const char* name : {"gt_horizontal_n0", "gt_horizontal_n1", "gt_horizontal_n2",
                                 "gt_vertical_n2", "shifted_cotangent_P1"}) {
            for (long P2 = 0; P2 <= 3; ++P2) {
                Bindings b;
                if (std::string(name) != "shifted_cotangent_P1") b["P2"] = P2;
                RunResult r = run_scenario(name, b);
                ok = ok && r.symmetric && *r.symmetric;
            }
        }
        for (const RunResult& r :
             {run_scenario("gt_series"), run_scenario("delta_jacobi"),
              run_scenario("k3_rank_r", {{"r", 2}, {"order", 8}}),
              run_scenario("k3_rank_r", {{"r", 3}, {"order", 9}})}) {
            for (const auto& row : r.series) ok = ok && row.symmetric;
        }
        return ok;
    });

    criterion("criterion-08 t=1 equals the cohomological route; cyclotomic denominators", [&] {
        bool ok = true;
        for (const char* name :
             {"gt_horizontal_n0", "gt_horizontal_n1", "gt_horizontal_n2",
              "shifted_cotangent_P1"}) {
            for (long P2 = 0; P2 <= 3; ++P2) {
                Bindings b;
                if (std::string(name) != "shifted_cotangent_P1") b["P2"] = P2;
                FixedLocusData d =
                    build_localize_data(ScenarioRegistry::instance().get(name), b);
                RatFunc val = chi_t(d);
                ok = ok && (euler_oracle(d) == eval_at_t1(val));
                ok = ok && denominator_is_cyclotomic(val);
            }
        }
        // the rank-2 vertical scenario still has cyclotomic poles
        for (long P2 = 0; P2 <= 3; ++P2)
            ok = ok && denominator_is_cyclotomic(chi_of("gt_vertical_n2", P2));
        return ok;
    });

    criterion("criterion-09 shifted cotangent of the line: -[2]_t from Hodge numbers", [&] {
        RunResult r = run_scenario("shifted_cotangent_P1");
        RatFunc val = chi_t(build_localize_data(
            ScenarioRegistry::instance().get("shifted_cotangent_P1"), {}));
        // chi_{-t} of the line from its Hodge diamond h^{0,0} = h^{1,1} = 1
        RatFunc hodge = RatFunc(1) + RatFunc::s_power(2);
        bool ok = (val == -quantum_integer(2));
        ok = ok && (val == RatFunc(-1) * RatFunc::s_power(-1) * hodge);
        return ok && r.ok() && r.golden_match && *r.golden_match;
    });

    criterion("criterion-10 pushforward, Koszul and duality identities in the root ring", [&] {
        bool ok = true;
        for (int r0 = 1; r0 <= 5; ++r0)
            for (int r1 = r0; r1 <= 5; ++r1) ok = ok && eagon_northcott_check(r0, r1);
        for (int r = 1; r <= 5; ++r) ok = ok && corollary_lambda_check(r);
        for (int r = 1; r <= 4; ++r) ok = ok && duality_identity_check(r);
        return ok && run_scenario("en_identities").ok();
    });

    criterion("criterion-11 quantum-integer identities through 12", [&] {
        bool ok = true;
        for (long c = 1; c <= 12; ++c) {
            for (int r = 1; r <= 12; ++r)
                ok = ok && (substitute_tr(quantum_integer(c), r) * quantum_integer(r) ==
                            quantum_integer(c * r));
            ok = ok && (substitute_tr(quantum_integer(c), 2) ==
                        quantum_integer(2 * c) / quantum_integer(2));
        }
        return ok && run_scenario("quantum_identities").ok();
    });

    criterion("criterion-12 K3 series: closed forms, cusp form, Hodge oracle", [&] {
        bool ok = vw_k3_series(2, 8).agrees_with(k3_prime_rank_rhs(2, 8));
        ok = ok && vw_k3_series(3, 9).agrees_with(k3_prime_rank_rhs(3, 9));
        QSeries d = delta_tilde(12);
        for (const auto& [e, c] : d.coeffs()) ok = ok && is_bar_symmetric(c);
        // eta^24 via the divisor-sum recurrence n a_n = -24 sum sigma(j) a_(n-j)
        {
            std::vector<long> sigma(13, 0);
            for (int dd = 1; dd <= 12; ++dd)
                for (int m = dd; m <= 12; m += dd) sigma[static_cast<size_t>(m)] += dd;
            std::vector<Rat> a(13);
            a[0] = Rat(1);
            for (int n = 1; n <= 12; ++n) {
                Rat acc(0);
                for (int j = 1; j <= n; ++j)
                    acc += Rat(sigma[static_cast<size_t>(j)]) * a[static_cast<size_t>(n - j)];
                a[static_cast<size_t>(n)] = acc * Rat(-24) / Rat(n);
            }
            for (int e = 1; e <= 12; ++e)
                ok = ok && (eval_at_t1(d.coeff(e)) == ParamPoly(a[static_cast<size_t>(e - 1)]));
        }
        RatFunc hodge = RatFunc(2) + RatFunc(20) * RatFunc::s_power(2) +
                        RatFunc(2) * RatFunc::s_power(4);
        ok = ok && (hilb_chi(1, 12) == hodge);
        ok = ok && run_scenario("delta_jacobi").ok();
        ok = ok && run_scenario("k3_rank_r", {{"r", 2}, {"order", 8}}).ok();
        ok = ok && run_scenario("k3_rank_r", {{"r", 3}, {"order", 9}}).ok();
        return ok;
    });

    criterion("criterion-13 wall-crossing round trip and multiple-cover reduction", [&] {
        bool ok = run_scenario("wallcross_roundtrip", {{"N", 4}, {"seed", 2024}}).ok();
        // independent spot check of the round trip at a second seed
        std::mt19937 rng(99);
        std::uniform_int_distribution<long> chid(1, 9);
        std::uniform_int_distribution<int> ex(-3, 3), co(-4, 4);
        for (int N = 1; N <= 4 && ok; ++N) {
            ChargeProfile p;
            p.divisibility = N;
            p.hzero = true;
            std::map<int, RatFunc> vwm;
            for (int m = 1; m <= N; ++m) {
                p.chi_of_multiple[m] = chid(rng);
                HalfLaurent h;
                for (int i = 0; i < 4; ++i) h.add_term(ex(rng), ParamPoly(Rat(co(rng))));
                if (h.is_zero()) h = HalfLaurent(Rat(1));
                vwm[m] = RatFunc(h);
            }
            ok = ok && (vw_from_pairs(p, pairs_all_levels(p, vwm)) == vwm);
        }
        for (int r = 1; r <= 4 && ok; ++r)
            for (long chi0 = 5; chi0 <= 9 && ok; ++chi0) {
                RatFunc H = hilb_chi(1, 4);
                long vd = 2 + chi0 - 1;
                RatFunc chivir = substitute_tr(pbundle_chi(chi0, H), r);
                RatFunc lhs = uniform_contribution(r, vd, r * chi0, chivir);
                ChargeProfile p;
                p.divisibility = r;
                p.hzero = false;
                for (int m = 1; m <= r; ++m) p.chi_of_multiple[m] = m * chi0;
                RatFunc vw1 = RatFunc::s_power(-2) * H;
                ok = ok && (lhs == pairs_from_vw(p, {{r, multiple_cover(vw1, r)}}));
            }
        return ok;
    });

    std::cout << (g_failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS"
                                  : std::to_string(g_failures) + " CRITERIA FAILED")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
