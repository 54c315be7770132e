#include "vwref/params.hpp"

#include "vwref/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vw {

ParamRegistry::ParamRegistry() : names_{"g", "c2"} {}

ParamRegistry& ParamRegistry::instance() {
    static ParamRegistry reg;
    return reg;
}

int ParamRegistry::declare(const std::string& name) {
    if (auto i = find(name)) return *i;
    names_.push_back(name);
    return static_cast<int>(names_.size()) - 1;
}

std::optional<int> ParamRegistry::find(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

const std::string& ParamRegistry::name(int index) const { return names_.at(index); }

static int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int ea = i < a.size() ? a[i] : 0;
        int eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea > eb;  // higher power of earlier symbol first
    }
    return false;
}

static void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

ParamPoly::ParamPoly(const Rat& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

ParamPoly ParamPoly::symbol(const std::string& name) {
    auto idx = ParamRegistry::instance().find(name);
    if (!idx) throw UndeclaredParameter("undeclared parameter symbol '" + name + "'");
    Monomial m(static_cast<size_t>(*idx) + 1, 0);
    m[static_cast<size_t>(*idx)] = 1;
    ParamPoly p;
    p.terms_[m] = Rat(1);
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat ParamPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw CalcError("ParamPoly::constant_value on non-constant '" + str() + "'");
    return terms_.begin()->second;
}

void ParamPoly::add_term(const Monomial& mono, const Rat& c) {
    if (c == 0) return;
    Monomial m = mono;
    trim(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly out = *this;
    out += o;
    return out;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly out = *this;
    out -= o;
    return out;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (size_t i = 0; i < m.size(); ++i) {
                int ea = i < ma.size() ? ma[i] : 0;
                int eb = i < mb.size() ? mb[i] : 0;
                m[i] = ea + eb;
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    *this = *this * o;
    return *this;
}

ParamPoly ParamPoly::operator*(const Rat& c) const {
    ParamPoly out;
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

ParamPoly& ParamPoly::operator*=(const Rat& c) {
    *this = *this * c;
    return *this;
}

bool ParamPoly::operator<(const ParamPoly& o) const {
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    MonomialOrder less;
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (less(a->first, b->first)) return true;
        if (less(b->first, a->first)) return false;
        int cmp = mpq_cmp(a->second.get_mpq_t(), b->second.get_mpq_t());
        if (cmp != 0) return cmp < 0;
    }
    return a == terms_.end() && b != o.terms_.end();
}

ParamPoly ParamPoly::pow(long e) const {
    if (e < 0) throw CalcError("ParamPoly::pow: negative exponent");
    ParamPoly out(Rat(1));
    ParamPoly base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

ParamPoly ParamPoly::substitute(const std::map<std::string, Rat>& values) const {
    auto& reg = ParamRegistry::instance();
    std::map<int, Rat> byidx;
    for (const auto& [name, v] : values) {
        auto idx = reg.find(name);
        if (!idx) throw UndeclaredParameter("undeclared parameter symbol '" + name + "'");
        byidx[*idx] = v;
    }
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        Rat coeff = c;
        Monomial rest = m;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = byidx.find(static_cast<int>(i));
            if (it == byidx.end()) continue;
            coeff *= rat_pow(it->second, m[i]);
            rest[i] = 0;
        }
        out.add_term(rest, coeff);
    }
    return out;
}

Rat ParamPoly::evaluate(const std::map<std::string, Rat>& values) const {
    ParamPoly sub = substitute(values);
    if (!sub.is_constant())
        throw CalcError("ParamPoly::evaluate: unassigned symbols remain in '" + sub.str() + "'");
    return sub.constant_value();
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    auto& reg = ParamRegistry::instance();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_mono = total_degree(m) > 0;
        if (!has_mono || ac != 1) {
            os << rat_str(ac);
            if (has_mono) os << "*";
        }
        bool firstsym = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!firstsym) os << "*";
            firstsym = false;
            os << reg.name(static_cast<int>(i));
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

} // namespace vw
