#include "vwref/qseries.hpp"

#include "vwref/errors.hpp"

#include <algorithm>
#include <sstream>

namespace vw {

QSeries QSeries::monomial(int e, const RatFunc& c, int known_to) {
    QSeries out(known_to);
    out.set_coeff(e, c);
    return out;
}

int QSeries::valuation() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

RatFunc QSeries::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? RatFunc() : it->second;
}

void QSeries::set_coeff(int e, const RatFunc& c) {
    if (c.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

void QSeries::add_coeff(int e, const RatFunc& c) { set_coeff(e, coeff(e) + c); }

void QSeries::drop_unknown() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first > known_to_)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries out(std::min(known_to_, o.known_to_));
    out.coeffs_ = coeffs_;
    for (const auto& [e, c] : o.coeffs_) out.add_coeff(e, c);
    out.drop_unknown();
    return out;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries out(std::min(known_to_, o.known_to_));
    out.coeffs_ = coeffs_;
    for (const auto& [e, c] : o.coeffs_) out.add_coeff(e, -c);
    out.drop_unknown();
    return out;
}

QSeries QSeries::operator*(const QSeries& o) const {
    // truncation of a product is limited by each factor's truncation shifted
    // by the other's valuation
    int k = std::min(known_to_ + o.valuation(), o.known_to_ + valuation());
    QSeries out(k);
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : o.coeffs_) {
            if (ea + eb > k) continue;
            out.add_coeff(ea + eb, ca * cb);
        }
    return out;
}

QSeries QSeries::operator*(const RatFunc& c) const {
    QSeries out(known_to_);
    for (const auto& [e, v] : coeffs_) out.set_coeff(e, v * c);
    return out;
}

bool QSeries::agrees_with(const QSeries& o) const {
    int k = std::min(known_to_, o.known_to_);
    int lo = std::min(coeffs_.empty() ? k : valuation(), o.coeffs_.empty() ? k : o.valuation());
    for (int e = lo; e <= k; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

QSeries QSeries::inverse() const {
    if (coeffs_.empty()) throw CalcError("QSeries: inverse of zero");
    int v = valuation();
    RatFunc lead = coeff(v);
    RatFunc leadinv = RatFunc(1) / lead;
    int n = known_to_ - v;  // terms of the normalized series 1 + h q + ...
    // invert the unit part by the standard convolution recurrence
    QSeries out(known_to_ - 2 * v);
    std::map<int, RatFunc> b;  // b_k of the inverse unit part
    b[0] = RatFunc(1);
    for (int k = 1; k <= n; ++k) {
        RatFunc acc;
        for (int j = 0; j < k; ++j) {
            auto itb = b.find(j);
            if (itb == b.end()) continue;
            RatFunc a = coeff(v + k - j) * leadinv;
            if (a.is_zero()) continue;
            acc += itb->second * a;
        }
        if (!acc.is_zero()) b[k] = -acc;
    }
    for (const auto& [k, c] : b) out.set_coeff(k - v, c * leadinv);
    out.drop_unknown();
    return out;
}

QSeries QSeries::negate_q() const {
    QSeries out(known_to_);
    for (const auto& [e, c] : coeffs_) out.set_coeff(e, (e % 2 == 0) ? c : -c);
    return out;
}

QSeries QSeries::stretch_q(int r) const {
    QSeries out(known_to_ * r + (r - 1));
    for (const auto& [e, c] : coeffs_) out.set_coeff(e * r, c);
    return out;
}

QSeries QSeries::select_divisible(int r) const {
    QSeries out(known_to_ >= 0 ? known_to_ / r : (known_to_ - r + 1) / r);
    for (const auto& [e, c] : coeffs_) {
        if (e % r != 0) continue;
        out.set_coeff(e / r, c);
    }
    return out;
}

QSeries QSeries::map_tr(int r) const {
    QSeries out(known_to_);
    for (const auto& [e, c] : coeffs_) out.set_coeff(e, substitute_tr(c, r));
    return out;
}

QSeries QSeries::shift_q(int j) const {
    QSeries out(known_to_ + j);
    for (const auto& [e, c] : coeffs_) out.set_coeff(e + j, c);
    return out;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*q^" << e;
    }
    if (first) os << "0";
    os << " + O(q^" << known_to_ + 1 << ")";
    return os.str();
}

QSeries delta_tilde(int order) {
    if (order < 1) throw OrderTooLow("delta_tilde: order must be >= 1");
    QSeries prod(order);
    prod.set_coeff(0, RatFunc(1));
    RatFunc t = RatFunc::s_power(2), tinv = RatFunc::s_power(-2);
    for (int k = 1; k <= order; ++k) {
        QSeries f1(order);  // 1 - q^k
        f1.set_coeff(0, RatFunc(1));
        f1.set_coeff(k, RatFunc(-1));
        QSeries ft(order);  // 1 - t q^k
        ft.set_coeff(0, RatFunc(1));
        ft.set_coeff(k, -t);
        QSeries fti(order);  // 1 - t^-1 q^k
        fti.set_coeff(0, RatFunc(1));
        fti.set_coeff(k, -tinv);
        for (int i = 0; i < 20; ++i) prod = prod * f1;
        prod = prod * ft * ft * fti * fti;
    }
    return prod.shift_q(1);
}

RatFunc hilb_chi(int n, int order) {
    if (n < 0) throw CalcError("hilb_chi: n must be >= 0");
    if (n > order) throw OrderTooLow("hilb_chi: order too low for Hilb^" + std::to_string(n));
    // inverse of delta is known to (order+1) - 2 after the q shift; make sure
    // the coefficient of q^(n-1) is trusted
    QSeries inv = delta_tilde(n + 1).inverse();
    return RatFunc::s_power(2 * n) * inv.coeff(n - 1);
}

QSeries vw_k3_series(int r, int order) {
    if (r < 1) throw CalcError("vw_k3_series: r must be >= 1");
    QSeries out(order);
    // one shared delta inverse at the maximal index needed
    int max_index = 1;
    for (int d = 1; d <= r; ++d) {
        if (r % d != 0) continue;
        for (int m = (d == r ? -1 : 0); m * d + r <= order; ++m)
            max_index = std::max(max_index, (r / d) * m + 1);
    }
    QSeries dinv = delta_tilde(max_index + 1).inverse();
    auto hilb = [&](int nn) { return RatFunc::s_power(2 * nn) * dinv.coeff(nn - 1); };

    for (int d = 1; d <= r; ++d) {
        if (r % d != 0) continue;
        RatFunc dd = RatFunc(1) / quantum_integer(d).pow(2);
        for (int m = (d == r ? -1 : 0); m * d + r <= order; ++m) {
            int idx = (r / d) * m + 1;
            RatFunc term = dd * RatFunc::s_power(-2 * m * r - 2 * d) *
                           substitute_tr(hilb(idx), d);
            out.add_coeff(m * d + r, term);
        }
    }
    return out;
}

QSeries k3_prime_rank_rhs(int r, int order) {
    // both terms need delta^(-1) out to q^(r (order - r))
    int need = std::max(1, r * (order - r));
    QSeries dinv = delta_tilde(need + 2).inverse();
    QSeries term1 =
        dinv.map_tr(r).stretch_q(r).shift_q(r) * (RatFunc(1) / quantum_integer(r).pow(2));
    QSeries term2 = dinv.select_divisible(r).shift_q(r);
    QSeries sum = term1 + term2;
    // exact coefficients only claimed through the requested order
    QSeries out(order);
    for (const auto& [e, c] : sum.coeffs())
        if (e <= order) out.set_coeff(e, c);
    return out;
}

RatFunc multiple_cover(const RatFunc& vw1, int r) {
    if (r < 1) throw CalcError("multiple_cover: r must be >= 1");
    return substitute_tr(vw1, r) / quantum_integer(r).pow(2);
}

} // namespace vw
