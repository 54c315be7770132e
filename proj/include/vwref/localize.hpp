#pragma once

#include "vwref/eqkth.hpp"

namespace vw {

/// Complete localization input for one connected fixed-locus component:
///   base       integration ring of the component (or of a resolved cycle
///              inside it, when the virtual structure sheaf has been traded
///              for a Koszul-resolved numerator);
///   numerator  K-class whose Chern character multiplies the integrand
///              (the twisted virtual structure sheaf data);
///   nvir       virtual normal bundle, every atom of nonzero weight;
///   tangent_ch Chern character feeding the Todd class of the base;
///   prefactor  global scale (covering degrees, Koszul signs, weight
///              normalizations).
struct FixedLocusData {
    RingPtr base;
    EqKClass numerator;
    EqKClass nvir;
    CohClass tangent_ch;
    RatFunc prefactor = RatFunc(1);

    void validate() const;   // throws on zero-weight nvir atoms / ring mixups
};

/// The refined localization integral
///   prefactor * int_base ch(numerator) / ch(Lambda_-1 (nvir)^dual) * Td,
/// reduced to canonical form.
RatFunc chi_t(const FixedLocusData& data);

/// Cohomological substitute computed along an independent path: expands
/// 1/e(N^vir) in a formal equivariant variable tau (each LINE/TRIVIAL atom
/// contributes (c1 + w*tau)^(+-1), w = s-exponent/2), integrates over the
/// base and demands a tau-free answer; scaled by the prefactor at t = 1.
/// Throws NonLineAtom on RANK2 atoms and ResidualTau if the integral keeps
/// tau-dependence (a rank inconsistency).
ParamPoly euler_oracle(const FixedLocusData& data);

/// True iff f is invariant under t^(1/2) <-> t^(-1/2).
bool check_symmetry(const RatFunc& f);

} // namespace vw
