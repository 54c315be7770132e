#pragma once

#include "vwref/params.hpp"

#include <map>

namespace vw {

/// Laurent polynomial in the formal variable s with ParamPoly coefficients.
/// By convention s^2 = t, so the integer s-exponent e stands for t^(e/2);
/// this is the only place half-integer powers of t exist. Representation is
/// canonical: no zero coefficients, exponents sorted.
class HalfLaurent {
public:
    HalfLaurent() = default;
    HalfLaurent(const ParamPoly& c);    // NOLINT: implicit by design
    HalfLaurent(const Rat& c) : HalfLaurent(ParamPoly(c)) {}
    HalfLaurent(long c) : HalfLaurent(ParamPoly(Rat(c))) {}

    /// c * s^e.
    static HalfLaurent term(int e, const ParamPoly& c);
    static HalfLaurent s_power(int e) { return term(e, ParamPoly(Rat(1))); }

    bool is_zero() const { return coeffs_.empty(); }
    /// True when every coefficient is a rational constant.
    bool is_constant_coeffs() const;
    /// True when the polynomial is a single rational constant (exponent 0).
    bool is_rational() const;

    int lowest_exp() const;     // throws on zero
    int highest_exp() const;    // throws on zero

    const std::map<int, ParamPoly>& coeffs() const { return coeffs_; }
    ParamPoly coeff(int e) const;

    HalfLaurent operator-() const;
    HalfLaurent operator+(const HalfLaurent& o) const;
    HalfLaurent operator-(const HalfLaurent& o) const;
    HalfLaurent operator*(const HalfLaurent& o) const;
    HalfLaurent& operator+=(const HalfLaurent& o);
    HalfLaurent& operator-=(const HalfLaurent& o);
    HalfLaurent& operator*=(const HalfLaurent& o);
    bool operator==(const HalfLaurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const HalfLaurent& o) const { return !(*this == o); }

    HalfLaurent scaled(const Rat& c) const;
    /// Multiply by s^e.
    HalfLaurent shifted(int e) const;
    /// s -> s^(-1).
    HalfLaurent inverted_s() const;
    /// s -> s^r (r >= 1).
    HalfLaurent stretched(int r) const;
    HalfLaurent pow(long e) const;  // e >= 0

    /// Value at s = 1 (sum of coefficients).
    ParamPoly at_one() const;

    void add_term(int e, const ParamPoly& c);

private:
    std::map<int, ParamPoly> coeffs_;
};

/// Monic gcd over Q[s] of two Laurent polynomials with rational-constant
/// coefficients (s-power units discarded). Returns 1 if either is zero.
HalfLaurent laurent_gcd(const HalfLaurent& a, const HalfLaurent& b);

/// Exact division by a divisor with rational-constant coefficients.
/// Throws CalcError if the division leaves a remainder.
HalfLaurent laurent_divexact(const HalfLaurent& num, const HalfLaurent& div);

} // namespace vw
