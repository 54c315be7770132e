#include "vwref/localize.hpp"

#include "vwref/errors.hpp"

#include <map>

namespace vw {

void FixedLocusData::validate() const {
    if (!base) throw CalcError("FixedLocusData: no base ring");
    if (numerator.ring() != base || nvir.ring() != base || tangent_ch.ring() != base)
        throw MixedRings("FixedLocusData: numerator/nvir/tangent must live on the base ring");
    if (!nvir.all_weights_nonzero())
        throw ZeroWeightDenominator("FixedLocusData: nvir atom of weight zero");
}

RatFunc chi_t(const FixedLocusData& data) {
    data.validate();
    CohClass integrand = ch(data.numerator);
    integrand *= invert_unit(lambda_minus_one(dual(data.nvir)));
    long rank = 0;
    {
        // tangent rank is its degree-0 part; constant by construction
        RatFunc r0 = data.tangent_ch.degree0();
        rank = r0.is_zero() ? 0 : r0.rational_value().get_num().get_si();
    }
    integrand *= todd_from_tangent_ch(data.tangent_ch, rank);
    return data.prefactor * integrate(integrand);
}

namespace {

// Laurent polynomial in the formal equivariant variable tau with CohClass
// coefficients.
using TauSeries = std::map<int, CohClass>;

TauSeries tau_mul(const TauSeries& a, const TauSeries& b) {
    TauSeries out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            CohClass p = ca * cb;
            if (p.is_zero()) continue;
            auto it = out.find(ea + eb);
            if (it == out.end())
                out.emplace(ea + eb, p);
            else
                it->second += p;
        }
    return out;
}

} // namespace

ParamPoly euler_oracle(const FixedLocusData& data) {
    data.validate();
    const RingPtr& ring = data.base;
    int cd = ring->complex_dim();

    TauSeries total{{0, ring->unit()}};
    for (const auto& a : data.nvir.atoms()) {
        if (a.kind == Atom::Kind::Rank2)
            throw NonLineAtom("euler_oracle: RANK2 atom must be pre-split by the scenario");
        if (a.weight % 2 != 0)
            throw CalcError("euler_oracle: odd s-exponent is not an honest T-weight");
        Rat w(a.weight, 2);
        TauSeries factor;
        if (a.sign < 0) {
            // a subtracted atom multiplies 1/e(N^vir) by (c1 + w tau)
            factor[1] = ring->scalar(RatFunc(w));
            if (!a.c1.is_zero()) factor[0] = a.c1;
        } else {
            // an added atom contributes 1/(c1 + w tau), expanded by nilpotency
            Rat winv = Rat(1) / w;
            CohClass p = ring->unit();
            for (int j = 0; j <= cd; ++j) {
                CohClass termc = p * RatFunc(rat_pow(winv, j + 1) * Rat(j % 2 == 0 ? 1 : -1));
                if (!termc.is_zero()) factor[-1 - j] = termc;
                p *= a.c1;
                if (p.is_zero()) break;
            }
        }
        total = tau_mul(total, factor);
    }

    // integrate over the base; everything but tau^0 must die
    ParamPoly result;
    for (const auto& [e, c] : total) {
        RatFunc val = integrate(c);
        if (val.is_zero()) continue;
        if (e != 0)
            throw ResidualTau("euler_oracle: tau^" + std::to_string(e) +
                              " survives integration (rank inconsistency)");
        result = val.param_value();
    }
    return result * eval_at_t1(data.prefactor);
}

bool check_symmetry(const RatFunc& f) { return is_bar_symmetric(f); }

} // namespace vw
