#include "vwref/ratfunc.hpp"

#include "vwref/errors.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace vw {

RatFunc::RatFunc(const HalfLaurent& num, const HalfLaurent& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw CalcError("RatFunc: zero denominator");
    if (!den_.is_constant_coeffs())
        throw ParamDenominator("RatFunc: parameters in denominator: " + den.at_one().str());
    normalize();
}

// Slices of a Laurent polynomial by parameter monomial: each slice is a
// rational-coefficient Laurent polynomial.
static std::map<Monomial, HalfLaurent, MonomialOrder> slices(const HalfLaurent& p) {
    std::map<Monomial, HalfLaurent, MonomialOrder> out;
    for (const auto& [e, c] : p.coeffs())
        for (const auto& [m, r] : c.terms()) out[m].add_term(e, ParamPoly(r));
    return out;
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw CalcError("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = HalfLaurent(Rat(1));
        return;
    }

    // shift den to valuation 0, moving the s-power into num
    int v = den_.lowest_exp();
    if (v != 0) {
        den_ = den_.shifted(-v);
        num_ = num_.shifted(-v);
    }

    // cancel the gcd of den with every parameter-monomial slice of num
    HalfLaurent g = den_;
    for (const auto& [m, slice] : slices(num_)) {
        if (g.highest_exp() == 0) break;
        g = laurent_gcd(g, slice.shifted(-slice.lowest_exp()));
    }
    if (g.highest_exp() > 0) {
        num_ = laurent_divexact(num_, g);
        den_ = laurent_divexact(den_, g);
    }

    // scale: integer content 1, positive leading coefficient
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& [e, c] : den_.coeffs()) {
        Rat r = c.constant_value();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), r.get_den().get_mpz_t());
    }
    HalfLaurent den_scaled = den_.scaled(Rat(lcm_den));
    for (const auto& [e, c] : den_scaled.coeffs()) {
        mpz_class n = c.constant_value().get_num();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale = Rat(lcm_den) / Rat(gcd_num);
    if (den_scaled.coeff(den_scaled.highest_exp()).constant_value() < 0) scale = -scale;
    den_ = den_.scaled(scale);
    num_ = num_.scaled(scale);
}

Rat RatFunc::rational_value() const {
    if (!is_rational()) throw CalcError("RatFunc::rational_value on non-constant '" + str() + "'");
    return num_.is_zero() ? Rat(0) : num_.coeff(0).constant_value();
}

ParamPoly RatFunc::param_value() const {
    if (!is_polynomial() || (!num_.is_zero() && (num_.lowest_exp() != 0 || num_.highest_exp() != 0)))
        throw CalcError("RatFunc::param_value on non-scalar '" + str() + "'");
    return num_.is_zero() ? ParamPoly() : num_.coeff(0);
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw CalcError("RatFunc: division by zero");
    if (!o.num_.is_constant_coeffs())
        throw ParamDenominator("RatFunc: division would put parameters in a denominator: " +
                               o.str());
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e >= 0) {
        RatFunc out(1);
        RatFunc base = *this;
        while (e > 0) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }
    return RatFunc(1) / pow(-e);
}

// Prints one Laurent polynomial, terms by ascending exponent; multi-term
// parameter coefficients are parenthesized.
static std::string poly_str(const HalfLaurent& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.coeffs()) {
        std::string cs = c.str();
        bool composite = c.terms().size() > 1;
        bool negative = !composite && cs.size() > 0 && cs[0] == '-';
        if (first) {
            first = false;
            if (negative) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) cs = cs.substr(1);
        }
        if (e == 0) {
            os << cs;
        } else {
            if (composite) cs = "(" + cs + ")";
            if (cs != "1") os << cs << "*";
            os << "s^" << e;
        }
    }
    return os.str();
}

std::string RatFunc::str() const {
    if (num_.is_zero()) return "0";
    int k = num_.lowest_exp();
    HalfLaurent num0 = num_.shifted(-k);
    std::ostringstream os;
    if (k != 0) os << "s^" << k << " * ";
    os << "(" << poly_str(num0) << ")";
    if (!is_polynomial()) os << " / (" << poly_str(den_) << ")";
    return os.str();
}

RatFunc quantum_integer(long n) {
    if (n == 0) return RatFunc();
    if (n < 0) return -quantum_integer(-n);
    HalfLaurent sum;
    for (long e = -(n - 1); e <= n - 1; e += 2) sum.add_term(static_cast<int>(e), ParamPoly(Rat(1)));
    return RatFunc(sum);
}

RatFunc bar(const RatFunc& f) {
    return RatFunc(f.num().inverted_s(), f.den().inverted_s());
}

bool is_bar_symmetric(const RatFunc& f) { return bar(f) == f; }

ParamPoly eval_at_t1(const RatFunc& f) {
    HalfLaurent num = f.num(), den = f.den();
    // cancel removable (s-1) factors; with the fraction reduced this loop
    // normally runs zero times
    static const HalfLaurent s_minus_1 = HalfLaurent::s_power(1) - HalfLaurent(Rat(1));
    while (den.at_one().constant_value() == 0) {
        if (!num.at_one().is_zero())
            throw PoleAtOne("genuine pole at t = 1 in '" + f.str() + "'");
        num = laurent_divexact(num, s_minus_1);
        den = laurent_divexact(den, s_minus_1);
    }
    ParamPoly top = num.at_one();
    return top * (Rat(1) / den.at_one().constant_value());
}

RatFunc substitute_tr(const RatFunc& f, int r) {
    if (r < 1) throw CalcError("substitute_tr: r must be >= 1");
    if (r == 1) return f;
    return RatFunc(f.num().stretched(r), f.den().stretched(r));
}

bool denominator_is_cyclotomic(const RatFunc& f, int wmax) {
    HalfLaurent den = f.den();
    for (int w = 1; w <= wmax && den.highest_exp() > 0; ++w) {
        HalfLaurent factor = HalfLaurent(Rat(1)) - HalfLaurent::s_power(w);
        while (true) {
            HalfLaurent g = laurent_gcd(den, factor);
            if (g.highest_exp() == 0) break;
            den = laurent_divexact(den, g);
        }
    }
    return den.highest_exp() == 0;
}

int origin_valuation(const RatFunc& f) {
    if (f.is_zero()) return 0;
    return f.num().lowest_exp();
}

} // namespace vw
