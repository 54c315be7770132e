#pragma once

#include "vwref/halflaurent.hpp"

namespace vw {

/// Rational function in s = t^(1/2): a reduced fraction num/den of Laurent
/// polynomials. The numerator may carry parameter symbols; the denominator
/// is always parameter-free, which is what makes gcd reduction and a true
/// canonical form possible. Canonical invariants:
///   - den != 0, lowest s-exponent 0, integer coefficients with content 1,
///     positive leading coefficient;
///   - num and den coprime over Q[s, s^-1].
/// Values are immutable after construction.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const HalfLaurent& n) : num_(n), den_(Rat(1)) { normalize(); }  // NOLINT
    RatFunc(const ParamPoly& c) : num_(c), den_(Rat(1)) { normalize(); }    // NOLINT
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) { normalize(); }          // NOLINT
    RatFunc(long c) : RatFunc(Rat(c)) {}
    /// den must be nonzero with rational-constant coefficients.
    RatFunc(const HalfLaurent& num, const HalfLaurent& den);

    static RatFunc s_power(int e) { return RatFunc(HalfLaurent::s_power(e)); }
    static RatFunc symbol(const std::string& name) { return RatFunc(ParamPoly::symbol(name)); }

    const HalfLaurent& num() const { return num_; }
    const HalfLaurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == HalfLaurent(Rat(1)); }
    /// True when the value is a single rational constant.
    bool is_rational() const { return is_polynomial() && num_.is_rational(); }
    Rat rational_value() const;
    /// Polynomial (s-free, denominator-free) content; throws otherwise.
    ParamPoly param_value() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    /// Division; the divisor's numerator must be parameter-free
    /// (throws ParamDenominator otherwise) and nonzero.
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const { return RatFunc(1) / *this; }
    RatFunc pow(long e) const;

    /// Canonical string form: terms sorted by ascending s-exponent with an
    /// explicit overall s-power prefix, e.g. "s^1 * (2 - 2*g) / (1 + s^2)".
    std::string str() const;

private:
    void normalize();
    HalfLaurent num_, den_;
};

/// [n]_t = (t^(n/2) - t^(-n/2)) / (t^(1/2) - t^(-1/2)):
/// s^(-(n-1)) + s^(-(n-3)) + ... + s^(n-1) for n >= 1; [0] = 0; [-n] = -[n].
RatFunc quantum_integer(long n);

/// The involution s -> s^(-1) (i.e. t^(1/2) <-> t^(-1/2)), renormalized.
RatFunc bar(const RatFunc& f);

/// True iff bar(f) == f.
bool is_bar_symmetric(const RatFunc& f);

/// Value at t = 1 (s = 1), cancelling any removable (s-1) factors.
/// Throws PoleAtOne on a genuine pole.
ParamPoly eval_at_t1(const RatFunc& f);

/// t -> t^r, i.e. s -> s^r (r >= 1).
RatFunc substitute_tr(const RatFunc& f, int r);

/// True iff the canonical denominator is a product of a rational constant
/// and cyclotomic-type factors (1 - s^w), w != 0. wmax bounds the factor
/// search.
bool denominator_is_cyclotomic(const RatFunc& f, int wmax = 64);

/// Lowest s-exponent of the numerator minus denominator valuation (0):
/// negative values flag a pole at the origin t = 0.
int origin_valuation(const RatFunc& f);

} // namespace vw
