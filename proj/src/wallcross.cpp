#include "vwref/wallcross.hpp"

#include "vwref/errors.hpp"

#include <functional>
#include <vector>

namespace vw {

long ChargeProfile::chi(int m) const {
    auto it = chi_of_multiple.find(m);
    if (it == chi_of_multiple.end())
        throw MissingCharge("no chi value for multiple " + std::to_string(m));
    return it->second;
}

namespace {

RatFunc vw_at(const std::map<int, RatFunc>& vw, int m) {
    auto it = vw.find(m);
    if (it == vw.end()) throw MissingCharge("no invariant for multiple " + std::to_string(m));
    return it->second;
}

// factor (-1)^chi [chi]_t vw(m) of one tuple entry
RatFunc tuple_factor(const ChargeProfile& profile, const std::map<int, RatFunc>& vw, int m) {
    long chi = profile.chi(m);
    RatFunc f = quantum_integer(chi) * vw_at(vw, m);
    return (chi % 2 != 0) ? -f : f;
}

// sum over ordered tuples summing to `level`, coefficient (-1)^l / l!
RatFunc desk_sum(const ChargeProfile& profile, const std::map<int, RatFunc>& vw, int level) {
    RatFunc total;
    std::vector<int> tuple;
    std::function<void(int, const RatFunc&)> rec = [&](int rest, const RatFunc& partial) {
        if (rest == 0) {
            long l = static_cast<long>(tuple.size());
            Rat fact(1);
            for (long i = 2; i <= l; ++i) fact *= i;
            RatFunc term = partial * RatFunc(Rat(l % 2 ? -1 : 1) / fact);
            total += term;
            return;
        }
        for (int m = 1; m <= rest; ++m) {
            tuple.push_back(m);
            rec(rest - m, partial * tuple_factor(profile, vw, m));
            tuple.pop_back();
        }
    };
    rec(level, RatFunc(1));
    return total;
}

// the l = 1 term alone: (-1)^(chi-1) [chi]_t vw(level)
RatFunc leading_term(const ChargeProfile& profile, const std::map<int, RatFunc>& vw, int level) {
    long chi = profile.chi(level);
    RatFunc f = quantum_integer(chi) * vw_at(vw, level);
    return (chi % 2 == 0) ? -f : f;
}

} // namespace

RatFunc pairs_from_vw(const ChargeProfile& profile, const std::map<int, RatFunc>& vw) {
    if (profile.hzero) return desk_sum(profile, vw, profile.divisibility);
    return leading_term(profile, vw, profile.divisibility);
}

std::map<int, RatFunc> pairs_all_levels(const ChargeProfile& profile,
                                        const std::map<int, RatFunc>& vw) {
    std::map<int, RatFunc> out;
    for (int m = 1; m <= profile.divisibility; ++m) {
        out[m] = profile.hzero ? desk_sum(profile, vw, m) : leading_term(profile, vw, m);
    }
    return out;
}

std::map<int, RatFunc> vw_from_pairs(const ChargeProfile& profile,
                                     const std::map<int, RatFunc>& pairs) {
    std::map<int, RatFunc> vw;
    for (int m = 1; m <= profile.divisibility; ++m) {
        auto it = pairs.find(m);
        if (it == pairs.end())
            throw MissingCharge("no pair invariant for multiple " + std::to_string(m));
        long chi = profile.chi(m);
        RatFunc qc = quantum_integer(chi);
        if (qc.is_zero())
            throw DivisionByZeroQuantum("[chi]_t vanishes for multiple " + std::to_string(m));
        // isolate the l = 1 term against the lower levels already solved
        RatFunc rest;
        if (profile.hzero && m > 1) {
            std::map<int, RatFunc> lower = vw;
            lower[m] = RatFunc();  // placeholder: the l = 1 term is excluded below
            RatFunc with_zero_top = desk_sum(profile, lower, m);
            rest = with_zero_top;
        }
        RatFunc lead = it->second - rest;
        // l = 1 coefficient is (-1)^(chi - 1) [chi]_t
        RatFunc solved = lead / qc;
        if (chi % 2 == 0) solved = -solved;
        vw[m] = solved;
    }
    return vw;
}

RatFunc uniform_contribution(int r, long vd, long chi_ralpha_n, const RatFunc& chivir_series) {
    RatFunc out = RatFunc::s_power(static_cast<int>(-r * vd)) * chivir_series /
                  quantum_integer(r);
    return (chi_ralpha_n % 2 == 0) ? -out : out;
}

RatFunc pbundle_chi(long chi, const RatFunc& base_chi) {
    HalfLaurent geo;
    for (long j = 0; j < chi; ++j) geo.add_term(static_cast<int>(2 * j), ParamPoly(Rat(1)));
    return RatFunc(geo) * base_chi;
}

} // namespace vw
