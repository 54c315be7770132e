#pragma once

#include "vwref/cohring.hpp"

#include <vector>

namespace vw {

/// One signed, T-weighted summand of an equivariant K-theory class on a
/// fixed locus. Weights are stored as integer s-exponents (twice the
/// T-weight), so t^w enters as weight 2w and the square-root line's t^(1/2)
/// as weight 1. Odd weights only ever arise from square roots.
struct Atom {
    enum class Kind { Line, Rank2, Trivial };

    static Atom line(const CohClass& c1, int weight, int sign = +1);
    /// Rank-2 bundle given by its Chern character (degree-0 part 2) and the
    /// first Chern class of its determinant.
    static Atom rank2(const CohClass& ch, const CohClass& det_c1, int weight, int sign = +1);
    static Atom trivial(const RingPtr& ring, int weight, int sign = +1);

    int rank() const { return kind == Kind::Rank2 ? 2 : 1; }
    /// c1 of the determinant line.
    const CohClass& det_c1() const { return kind == Kind::Rank2 ? det : c1; }
    Atom dual() const;
    bool operator==(const Atom& o) const;

    Kind kind = Kind::Trivial;
    CohClass c1;   // Line: its first Chern class; Trivial: zero
    CohClass ch;   // Rank2 only
    CohClass det;  // Rank2 only
    int weight = 0;
    int sign = +1;
};

/// Signed formal sum of weighted atoms over one CohRing. Houses virtual
/// normal bundles, numerator classes and virtual cotangent restrictions.
class EqKClass {
public:
    EqKClass() = default;
    explicit EqKClass(RingPtr ring) : ring_(std::move(ring)) {}
    EqKClass(RingPtr ring, std::vector<Atom> atoms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }

    void add(const Atom& a);
    EqKClass operator+(const EqKClass& o) const;
    EqKClass operator-() const;

    /// Signed rank.
    long rank() const;
    bool all_weights_nonzero() const;

    bool operator==(const EqKClass& o) const;

private:
    RingPtr ring_;
    std::vector<Atom> atoms_;
};

/// Equivariant Chern character: LINE(c1) at weight e maps to s^e exp(c1),
/// RANK2 to s^e ch, TRIVIAL to s^e; additive over signed atoms.
CohClass ch(const EqKClass& x);

/// ch of the alternating sum of exterior powers, multiplicative over atoms:
///   LINE    -> 1 - s^e exp(c1)
///   RANK2   -> 1 - s^e ch + s^(2e) exp(det_c1)
///   TRIVIAL -> 1 - s^e
/// Negative atoms contribute the inverse factor, which requires nonzero
/// weight (ZeroWeightDenominator otherwise).
CohClass lambda_minus_one(const EqKClass& x);

/// Dual class: weights and determinant c1's negate; RANK2 Chern characters
/// transform by negating the degree-2 part.
EqKClass dual(const EqKClass& x);

/// c1 and s-exponent of the determinant line of the whole class, including
/// the weight contribution of each atom.
std::pair<CohClass, long> det_line(const EqKClass& x);

/// Canonical square root of the virtual canonical bundle: the determinant
/// of the nonnegative-weight part of the weight-graded virtual cotangent
/// restriction, times t^(r/2) for r its signed rank. Squaring the result
/// gives det of the whole input when the input is symmetric.
struct SqrtKvir {
    CohClass det_c1;
    long s_exponent = 0;
};
SqrtKvir sqrt_Kvir(const EqKClass& e_dot);

} // namespace vw
