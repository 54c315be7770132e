#pragma once

#include "vwref/ratfunc.hpp"

#include <map>

namespace vw {

/// Discrete data of a charge and its fractional multiples: divisibility N,
/// the Euler characteristics chi(m alpha / N (n)) for 1 <= m <= N, and
/// whether H^{0,1} = 0 = H^{0,2} (which switches on the full wall-crossing
/// sum rather than its leading term).
struct ChargeProfile {
    int divisibility = 1;
    std::map<int, long> chi_of_multiple;
    bool hzero = true;

    long chi(int m) const;   // throws MissingCharge
};

/// The pair invariant of the full charge from the invariants of its
/// multiples: the sum over ordered tuples (m_1..m_l) of positive integers
/// with sum N of
///   (-1)^l / l!  prod_i (-1)^(chi_i) [chi_i]_t vw(m_i),
/// or only the l = 1 term when hzero is false.
RatFunc pairs_from_vw(const ChargeProfile& profile, const std::map<int, RatFunc>& vw);

/// Same sum evaluated at every level m = 1..N (the charge profile of level
/// m reuses the chi values of the smaller multiples).
std::map<int, RatFunc> pairs_all_levels(const ChargeProfile& profile,
                                        const std::map<int, RatFunc>& vw);

/// Triangular inversion: recovers the vw map from pair invariants given for
/// every multiple 1..N. Inverse of pairs_all_levels.
std::map<int, RatFunc> vw_from_pairs(const ChargeProfile& profile,
                                     const std::map<int, RatFunc>& pairs);

/// Contribution of r-times-thickened uniform pairs to the pair invariant:
///   (-1)^(chi_ralpha_n - 1) [r]_t^(-1) s^(-r vd) chivir_series,
/// where chivir_series is the t^r-substituted virtual chi_{-t}-genus of the
/// surface pair moduli space and vd its reduced virtual dimension.
RatFunc uniform_contribution(int r, long vd, long chi_ralpha_n, const RatFunc& chivir_series);

/// Projective-bundle reduction of the pairs genus over a smooth moduli
/// space: (1 + t + ... + t^(chi-1)) * base_chi.
RatFunc pbundle_chi(long chi, const RatFunc& base_chi);

} // namespace vw
