#include "vwref/scenario.hpp"

namespace vw {

// Registry source for the shipped computations. The same format can be
// loaded from external files; see README for the grammar.
const char* builtin_scenario_text() {
    return R"scen(
# ---------------------------------------------------------------------------
# Rank-2 Higgs-pair computations on a general-type surface with a smooth
# connected canonical curve of genus g: horizontal nested-Hilbert components
# of lengths 0, 1, 2 and the vertical length-2 component. P2 = h^0(K_S^2).
# All weights are s-exponents with s^2 = t.
# ---------------------------------------------------------------------------

scenario gt_horizontal_n0 {
  title "length-0 horizontal component (a reduced point)"
  kind localize
  bind P2 = 1
  ring point
  prefactor 1
  numerator {
    atom trivial weight -3*P2
  }
  nvir dual {
    atom trivial weight -4 count P2
    atom trivial weight 2 count P2 sign -
  }
  tangent 0
  golden P2=0 "(1)"
  golden P2=1 "s^1 * (-1) / (1 + s^2)"
  golden P2=2 "s^2 * (1) / (1 + 2*s^2 + s^4)"
  golden P2=3 "s^3 * (-1) / (1 + 3*s^2 + 3*s^4 + s^6)"
}

scenario gt_horizontal_n1 {
  title "length-1 horizontal component, Koszul-resolved to the canonical curve"
  kind localize
  bind P2 = 1
  ring curve g
  prefactor -1
  numerator {
    atom line 3/2*k weight 4-3*P2
  }
  nvir dual {
    atom line -1/2*k weight -2
    atom line k weight 2
    atom trivial weight -4 count P2
    atom line -k weight -4 sign -
    atom line -k weight -2 sign -
    atom line 1/2*k weight -2 sign -
    atom trivial weight 2 count P2 sign -
  }
  tangent 1 - k
  golden P2=0 "(2 - 2*g)"
  golden P2=1 "s^1 * (-2 + 2*g) / (1 + s^2)"
  golden P2=2 "s^2 * (2 - 2*g) / (1 + 2*s^2 + s^4)"
  golden P2=3 "s^3 * (-2 + 2*g) / (1 + 3*s^2 + 3*s^4 + s^6)"
}

scenario gt_horizontal_n2 {
  title "length-2 horizontal component on the symmetric square of the curve"
  kind localize
  bind P2 = 1
  ring cxc g
  # 1/2 for the double cover C x C -> C^[2]
  prefactor 1/2
  numerator {
    atom line 3/2*a + 3/2*b - D weight 8-3*P2
  }
  nvir dual {
    atom line -1/2*b + D weight -2
    atom line -1/2*a weight -2
    atom line b - D weight 2
    atom line a weight 2
    atom trivial weight -4 count P2
    atom line -b + D weight -4 sign -
    atom line -a weight -4 sign -
    atom line -a + D weight -2 sign -
    atom line -b weight -2 sign -
    atom line 1/2*b - D weight -2 sign -
    atom line 1/2*a weight -2 sign -
    atom trivial weight 2 count P2 sign -
  }
  tangent 2 - a - b + D + (3 - 3*g)*vol
  golden P2=0 "s^-2 * (2 - 2*g + (7 - 9*g + 2*g^2)*s^2 + (2 - 2*g)*s^4)"
  golden P2=1 "s^-1 * (-2 + 2*g + (-7 + 9*g - 2*g^2)*s^2 + (-2 + 2*g)*s^4) / (1 + s^2)"
  golden P2=2 "(2 - 2*g + (7 - 9*g + 2*g^2)*s^2 + (2 - 2*g)*s^4) / (1 + 2*s^2 + s^4)"
  golden P2=3 "s^1 * (-2 + 2*g + (-7 + 9*g - 2*g^2)*s^2 + (-2 + 2*g)*s^4) / (1 + 3*s^2 + 3*s^4 + s^6)"
}

scenario gt_vertical_n2 {
  title "vertical length-2 component (a copy of the surface)"
  kind localize
  bind P2 = 1
  ring surface g
  prefactor s^-4 * (1 + s^2) / (-(s + s^-1))^P2
  numerator {
    atom trivial weight 0
  }
  # listed with inverse orientation: the exterior-algebra fraction of the
  # moving part multiplies the integrand directly
  nvir dual {
    atom line 2*kappa weight 2 sign -
    atom line -kappa weight 2 sign -
    atom rank2 ch 2 + kappa + ((g-1)/2 - c2)*pt det kappa weight 4 sign -
    atom line 3*kappa weight 4 sign -
    atom line 3*kappa weight 2
    atom line 2*kappa weight 4
    atom line -kappa weight 4
  }
  tangent 2 - kappa + ((g-1)/2 - c2)*pt
  golden P2=0 "s^-4 * (-1/12 + 1/12*g + 1/12*c2 + (-1 + g)*s^2 + (-23/6 + 23/6*g + 5/6*c2)*s^4 + (-1 + g)*s^6 + (-1/12 + 1/12*g + 1/12*c2)*s^8)"
  golden P2=1 "s^-3 * (1/12 - 1/12*g - 1/12*c2 + (1 - g)*s^2 + (23/6 - 23/6*g - 5/6*c2)*s^4 + (1 - g)*s^6 + (1/12 - 1/12*g - 1/12*c2)*s^8) / (1 + s^2)"
  golden P2=2 "s^-2 * (-1/12 + 1/12*g + 1/12*c2 + (-1 + g)*s^2 + (-23/6 + 23/6*g + 5/6*c2)*s^4 + (-1 + g)*s^6 + (-1/12 + 1/12*g + 1/12*c2)*s^8) / (1 + 2*s^2 + s^4)"
  golden P2=3 "s^-1 * (1/12 - 1/12*g - 1/12*c2 + (1 - g)*s^2 + (23/6 - 23/6*g - 5/6*c2)*s^4 + (1 - g)*s^6 + (1/12 - 1/12*g - 1/12*c2)*s^8) / (1 + 3*s^2 + 3*s^4 + s^6)"
}

scenario shifted_cotangent_P1 {
  title "shifted cotangent bundle of the projective line"
  kind localize
  ring curve 0
  prefactor 1
  numerator {
    atom line k weight 1
  }
  nvir {
    atom line k weight 2 sign -
  }
  tangent 1 - k
  golden "s^-1 * (-1 - s^2)"
}

# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------

scenario gt_series {
  title "rank-2 general-type generating series through q^2"
  kind series
  op gentype
  bind P2 = 1
  bind order = 2
}

scenario delta_jacobi {
  title "weight-1 index-10 Jacobi cusp form and its Hilbert-scheme inverse"
  kind series
  op delta
  bind order = 12
}

scenario k3_rank_r {
  title "K3 rank-r generating series as a divisor sum"
  kind series
  op k3
  bind r = 2
  bind order = 8
}

# ---------------------------------------------------------------------------
# Wall crossing
# ---------------------------------------------------------------------------

scenario pairs_pg {
  title "rank-2 trivial-determinant pairs on a surface with p_g > 0"
  kind wallcross
  op pairs_pg
  bind p_g = 2
  bind chi = 5
}

scenario wallcross_desk_n2 {
  title "ordered-tuple wall-crossing sum at divisibility 2, unit invariants"
  kind wallcross
  op desk
  profile N 2 hzero yes
  chi 1 = 3
  chi 2 = 4
  vw 1 "1"
  vw 2 "1"
  golden "s^-4 * (1/2 - s^1 + s^2 - s^3 + 3/2*s^4 - s^5 + s^6 - s^7 + 1/2*s^8)"
}

scenario wallcross_roundtrip {
  title "pair/invariant conversion: inversion, specialization, multiple covers"
  kind wallcross
  op roundtrip
  bind N = 4
  bind seed = 2024
}

# ---------------------------------------------------------------------------
# Identities
# ---------------------------------------------------------------------------

scenario en_identities {
  title "degeneracy-locus pushforward identities in the root ring"
  kind identity
  op eagon_northcott
  bind rmax = 5
}

scenario quantum_identities {
  title "quantum-integer stretching, symmetry and specialization identities"
  kind identity
  op quantum
  bind nmax = 12
}
)scen";
}

} // namespace vw
