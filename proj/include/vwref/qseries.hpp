#pragma once

#include "vwref/ratfunc.hpp"

#include <map>

namespace vw {

/// Truncated Laurent series in q with RatFunc coefficients. known_to is the
/// largest q-exponent whose coefficient is trusted; arithmetic tracks it
/// conservatively.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(int known_to) : known_to_(known_to) {}

    static QSeries monomial(int e, const RatFunc& c, int known_to);

    int known_to() const { return known_to_; }
    /// Lowest stored exponent (0 when empty).
    int valuation() const;
    RatFunc coeff(int e) const;
    const std::map<int, RatFunc>& coeffs() const { return coeffs_; }

    void set_coeff(int e, const RatFunc& c);
    void add_coeff(int e, const RatFunc& c);

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const RatFunc& c) const;
    /// Equality of all coefficients up to min(known_to).
    bool agrees_with(const QSeries& o) const;

    /// Series inverse; the lowest coefficient must be invertible. The result
    /// is known to known_to - 2*valuation.
    QSeries inverse() const;

    /// q -> -q.
    QSeries negate_q() const;
    /// q -> q^r (exponents scaled by r; known_to scales too).
    QSeries stretch_q(int r) const;
    /// Keeps exponents divisible by r, mapping q^(rk) to q^k. Realizes the
    /// root-of-unity average (1/r) sum_j f(e^(2 pi i j / r) q^(1/r)).
    QSeries select_divisible(int r) const;
    /// Applies t -> t^r to every coefficient.
    QSeries map_tr(int r) const;
    /// Multiplication by q^j.
    QSeries shift_q(int j) const;

    std::string str() const;

private:
    void drop_unknown();
    std::map<int, RatFunc> coeffs_;
    int known_to_ = 0;
};

/// The weight-1 index-10 Jacobi cusp form
///   q prod_{k>=1} (1-q^k)^20 (1-t q^k)^2 (1-t^-1 q^k)^2
/// truncated at q^order. Every coefficient is bar-symmetric.
QSeries delta_tilde(int order);

/// chi_{-t} of the Hilbert scheme of n points of a K3 surface, read off the
/// generating identity sum_{k>=-1} t^(-k-1) chi_{-t}(Hilb^(k+1)) q^k =
/// delta_tilde^(-1). Throws OrderTooLow when the truncation cannot reach n.
RatFunc hilb_chi(int n, int order);

/// Rank-r K3 generating series: the divisor sum over d | r of
/// [d]_t^(-2) sum_m t^(-mr-d) chi_{-t^d}(Hilb^((r/d)m+1)) q^(md+r),
/// with the root-of-unity averages realized by divisibility selection.
QSeries vw_k3_series(int r, int order);

/// Independent right-hand side for prime rank: [r]_t^(-2) q^r
/// delta_tilde(q^r, t^r)^(-1) plus the q-power selection of
/// q^r delta_tilde(q^(1/r), t)^(-1); coded via direct series operations.
QSeries k3_prime_rank_rhs(int r, int order);

/// t^r-substituted multiple cover: vw1(t^r) / [r]_t^2.
RatFunc multiple_cover(const RatFunc& vw1, int r);

/// Rank-2 generating series on a general-type surface through q^2, with
/// symbolic g and c2, assembled from the localization engine's horizontal
/// and vertical fixed-locus computations. Throws OrderTooLow above order 2.
QSeries gen_type_series(long P2, int order = 2);

} // namespace vw
