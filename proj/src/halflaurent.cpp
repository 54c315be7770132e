#include "vwref/halflaurent.hpp"

#include "vwref/errors.hpp"

#include <algorithm>
#include <vector>

namespace vw {

HalfLaurent::HalfLaurent(const ParamPoly& c) {
    if (!c.is_zero()) coeffs_[0] = c;
}

HalfLaurent HalfLaurent::term(int e, const ParamPoly& c) {
    HalfLaurent out;
    if (!c.is_zero()) out.coeffs_[e] = c;
    return out;
}

bool HalfLaurent::is_constant_coeffs() const {
    for (const auto& [e, c] : coeffs_)
        if (!c.is_constant()) return false;
    return true;
}

bool HalfLaurent::is_rational() const {
    if (coeffs_.empty()) return true;
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_constant();
}

int HalfLaurent::lowest_exp() const {
    if (coeffs_.empty()) throw CalcError("lowest_exp of zero");
    return coeffs_.begin()->first;
}

int HalfLaurent::highest_exp() const {
    if (coeffs_.empty()) throw CalcError("highest_exp of zero");
    return coeffs_.rbegin()->first;
}

ParamPoly HalfLaurent::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? ParamPoly() : it->second;
}

void HalfLaurent::add_term(int e, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
    return out;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

HalfLaurent HalfLaurent::operator+(const HalfLaurent& o) const {
    HalfLaurent out = *this;
    out += o;
    return out;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& o) const {
    HalfLaurent out = *this;
    out -= o;
    return out;
}

HalfLaurent HalfLaurent::operator*(const HalfLaurent& o) const {
    HalfLaurent out;
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : o.coeffs_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
    *this = *this * o;
    return *this;
}

HalfLaurent HalfLaurent::scaled(const Rat& c) const {
    HalfLaurent out;
    if (c == 0) return out;
    for (const auto& [e, v] : coeffs_) out.coeffs_[e] = v * c;
    return out;
}

HalfLaurent HalfLaurent::shifted(int e) const {
    HalfLaurent out;
    for (const auto& [ee, v] : coeffs_) out.coeffs_[ee + e] = v;
    return out;
}

HalfLaurent HalfLaurent::inverted_s() const {
    HalfLaurent out;
    for (const auto& [e, v] : coeffs_) out.coeffs_[-e] = v;
    return out;
}

HalfLaurent HalfLaurent::stretched(int r) const {
    if (r < 1) throw CalcError("stretched: r must be >= 1");
    HalfLaurent out;
    for (const auto& [e, v] : coeffs_) out.coeffs_[e * r] = v;
    return out;
}

HalfLaurent HalfLaurent::pow(long e) const {
    if (e < 0) throw CalcError("HalfLaurent::pow: negative exponent");
    HalfLaurent out(Rat(1));
    HalfLaurent base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

ParamPoly HalfLaurent::at_one() const {
    ParamPoly sum;
    for (const auto& [e, c] : coeffs_) sum += c;
    return sum;
}

// Dense rational vector form of a constant-coefficient Laurent polynomial,
// shifted to valuation 0.
static std::vector<Rat> to_dense(const HalfLaurent& p) {
    std::vector<Rat> v;
    if (p.is_zero()) return v;
    int lo = p.lowest_exp(), hi = p.highest_exp();
    v.assign(static_cast<size_t>(hi - lo + 1), Rat(0));
    for (const auto& [e, c] : p.coeffs()) v[static_cast<size_t>(e - lo)] = c.constant_value();
    return v;
}

static void make_monic(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty()) return;
    Rat lead = v.back();
    for (auto& c : v) c /= lead;
}

// Remainder of a by monic b (dense, b nonempty with b.back()==1).
static std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size()) {
        Rat q = a.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

HalfLaurent laurent_gcd(const HalfLaurent& a, const HalfLaurent& b) {
    if (!a.is_constant_coeffs() || !b.is_constant_coeffs())
        throw CalcError("laurent_gcd requires rational coefficients");
    if (a.is_zero() || b.is_zero()) return HalfLaurent(Rat(1));
    std::vector<Rat> x = to_dense(a), y = to_dense(b);
    make_monic(x);
    make_monic(y);
    while (!y.empty()) {
        std::vector<Rat> r = poly_rem(x, y);
        make_monic(r);
        x = y;
        y = r;
    }
    HalfLaurent out;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) out.add_term(static_cast<int>(i), ParamPoly(x[i]));
    return out;
}

HalfLaurent laurent_divexact(const HalfLaurent& num, const HalfLaurent& div) {
    if (!div.is_constant_coeffs() || div.is_zero())
        throw CalcError("laurent_divexact: divisor must be nonzero with rational coefficients");
    if (num.is_zero()) return HalfLaurent();
    int dlo = div.lowest_exp(), dhi = div.highest_exp();
    Rat lead = div.coeff(dhi).constant_value();
    // long division from the top exponent down
    HalfLaurent rem = num;
    HalfLaurent quot;
    while (!rem.is_zero() && rem.highest_exp() - rem.lowest_exp() >= dhi - dlo) {
        int e = rem.highest_exp();
        ParamPoly q = rem.coeff(e) * (Rat(1) / lead);
        int qe = e - dhi;
        quot.add_term(qe, q);
        for (const auto& [de, dc] : div.coeffs())
            rem.add_term(de + qe, -(q * dc.constant_value()));
    }
    if (!rem.is_zero()) throw CalcError("laurent_divexact: division not exact");
    return quot;
}

} // namespace vw
