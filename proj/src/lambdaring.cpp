#include "vwref/lambdaring.hpp"

#include "vwref/errors.hpp"

#include <algorithm>
#include <sstream>

namespace vw {

std::string RootRing::var_name(int i) const {
    if (i < nx_) return "x" + std::to_string(i + 1);
    return "y" + std::to_string(i - nx_ + 1);
}

RootElem::RootElem(const Rat& c) {
    if (c != 0) terms_[{}] = c;
}

RootElem RootElem::monomial(const std::vector<int>& exps, const Rat& c) {
    RootElem e;
    e.add_term(exps, c);
    return e;
}

bool RootElem::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

static std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

void RootElem::add_term(const std::vector<int>& exps, const Rat& c) {
    if (c == 0) return;
    auto key = trimmed(exps);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RootElem RootElem::operator-() const {
    RootElem out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

RootElem RootElem::operator+(const RootElem& o) const {
    RootElem out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

RootElem RootElem::operator-(const RootElem& o) const {
    RootElem out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

RootElem RootElem::operator*(const RootElem& o) const {
    RootElem out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<int> m(std::max(ma.size(), mb.size()), 0);
            for (size_t i = 0; i < m.size(); ++i) {
                int ea = i < ma.size() ? ma[i] : 0;
                int eb = i < mb.size() ? mb[i] : 0;
                m[i] = ea + eb;
            }
            out.add_term(m, ca * cb);
        }
    return out;
}

RootElem RootElem::swapped(int i, int j) const {
    RootElem out;
    size_t need = static_cast<size_t>(std::max(i, j)) + 1;
    for (const auto& [m, c] : terms_) {
        std::vector<int> v = m;
        if (v.size() < need) v.resize(need, 0);
        std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
        out.add_term(v, c);
    }
    return out;
}

bool RootElem::symmetric_in(int lo, int hi) const {
    for (int i = lo; i + 1 < hi; ++i)
        if (swapped(i, i + 1) != *this) return false;
    return true;
}

std::string RootElem::str(const RootRing& ring) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << "*" << ring.var_name(static_cast<int>(i));
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

VirtualClass VirtualClass::e0_block(const RootRing& ring) {
    VirtualClass v;
    for (int i = 0; i < ring.nx(); ++i) {
        std::vector<int> e(static_cast<size_t>(i) + 1, 0);
        e[static_cast<size_t>(i)] = 1;
        v.add_line(e);
    }
    return v;
}

VirtualClass VirtualClass::e1_block(const RootRing& ring) {
    VirtualClass v;
    for (int i = 0; i < ring.ny(); ++i) {
        std::vector<int> e(static_cast<size_t>(ring.nx() + i) + 1, 0);
        e[static_cast<size_t>(ring.nx() + i)] = 1;
        v.add_line(e);
    }
    return v;
}

VirtualClass VirtualClass::trivial(const RootRing&, int mult) {
    VirtualClass v;
    v.add_line({}, mult);
    return v;
}

VirtualClass& VirtualClass::add_line(const std::vector<int>& exps, int mult) {
    if (mult != 0) lines_.emplace_back(trimmed(exps), mult);
    return *this;
}

VirtualClass VirtualClass::operator+(const VirtualClass& o) const {
    VirtualClass out = *this;
    for (const auto& [m, k] : o.lines_) out.lines_.emplace_back(m, k);
    return out;
}

VirtualClass VirtualClass::operator-() const {
    VirtualClass out = *this;
    for (auto& [m, k] : out.lines_) k = -k;
    return out;
}

VirtualClass VirtualClass::dual() const {
    VirtualClass out = *this;
    for (auto& [m, k] : out.lines_)
        for (auto& e : m) e = -e;
    for (auto& [m, k] : out.lines_) m = trimmed(m);
    return out;
}

RootElem VirtualClass::det() const {
    std::vector<int> e;
    for (const auto& [m, k] : lines_) {
        if (m.size() > e.size()) e.resize(m.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) e[i] += k * m[i];
    }
    return RootElem::monomial(e);
}

long VirtualClass::rank() const {
    long r = 0;
    for (const auto& [m, k] : lines_) r += k;
    return r;
}

namespace {

// multiply a truncated u-series by (1 + uL)
void mul_line(std::vector<RootElem>& series, const RootElem& L) {
    for (size_t k = series.size(); k-- > 1;) series[k] += series[k - 1] * L;
}

// multiply by 1/(1 + uL) = sum (-u)^j L^j
void mul_line_inverse(std::vector<RootElem>& series, const RootElem& L) {
    // convolve: out_k = sum_j series_{k-j} (-L)^j
    std::vector<RootElem> out(series.size());
    std::vector<RootElem> powers(series.size());
    powers[0] = RootElem(Rat(1));
    for (size_t j = 1; j < powers.size(); ++j) powers[j] = powers[j - 1] * (-L);
    for (size_t k = 0; k < series.size(); ++k)
        for (size_t j = 0; j <= k; ++j) out[k] += series[k - j] * powers[j];
    series = std::move(out);
}

} // namespace

std::vector<RootElem> lambda_series(const VirtualClass& v, int order) {
    std::vector<RootElem> series(static_cast<size_t>(order) + 1);
    series[0] = RootElem(Rat(1));
    for (const auto& [m, mult] : v.lines()) {
        RootElem L = RootElem::monomial(m);
        for (int i = 0; i < std::abs(mult); ++i) {
            if (mult > 0)
                mul_line(series, L);
            else
                mul_line_inverse(series, L);
        }
    }
    return series;
}

RootElem exterior(int k, const VirtualClass& v) {
    if (k < 0) throw CalcError("exterior: negative degree");
    return lambda_series(v, k)[static_cast<size_t>(k)];
}

RootElem symmetric(int k, const VirtualClass& v) {
    if (k < 0) throw CalcError("symmetric: negative degree");
    // Sym_u(v) = Lambda_-u(v)^(-1) = Lambda_u(-v) with u -> -u twist:
    // for a single positive line both give sum u^j L^j.
    std::vector<RootElem> series = lambda_series(-v, k);
    RootElem out = series[static_cast<size_t>(k)];
    return (k % 2 == 0) ? out : -out;
}

bool eagon_northcott_check(int r0, int r1) {
    if (r0 > r1) throw RankOrder("eagon_northcott_check: r0 > r1");
    if (r0 < 1) throw RankOrder("eagon_northcott_check: r0 < 1");
    RootRing ring(r0, r1);
    VirtualClass E0 = VirtualClass::e0_block(ring);
    VirtualClass E1 = VirtualClass::e1_block(ring);
    RootElem detE0 = E0.det();

    // Koszul pushforward: O + sum_{i=r0}^{r1} (-1)^(i+1-r0)
    //                        Lambda^i(E1^*) Sym^(i-r0)(E0) det(E0)
    RootElem lhs(Rat(1));
    VirtualClass E1dual = E1.dual();
    for (int i = r0; i <= r1; ++i) {
        RootElem term = exterior(i, E1dual) * symmetric(i - r0, E0) * detE0;
        if ((i + 1 - r0) % 2 != 0) term = -term;
        lhs += term;
    }

    // 1 - det(E0 - E1) Lambda^(r1-r0)(E1 - E0)
    RootElem rhs = RootElem(Rat(1)) -
                   detE0 * E1.dual().det() * exterior(r1 - r0, E1 - E0);

    if (lhs != rhs) return false;
    // results of bundle-level operations are symmetric in each root block
    return lhs.symmetric_in(0, r0) && lhs.symmetric_in(r0, r0 + r1);
}

bool corollary_lambda_check(int rank) {
    RootRing ring(0, rank);
    VirtualClass V = VirtualClass::e1_block(ring);
    VirtualClass O = VirtualClass::trivial(ring);

    // alternating sum of exterior powers of V^*
    RootElem koszul;
    VirtualClass Vdual = V.dual();
    for (int i = 0; i <= rank; ++i) {
        RootElem term = exterior(i, Vdual);
        koszul += (i % 2 == 0) ? term : -term;
    }

    RootElem en = RootElem(Rat(1)) - Vdual.det() * exterior(rank - 1, V - O);
    return koszul == en;
}

bool duality_identity_check(int rank) {
    RootRing ring(0, rank);
    VirtualClass V = VirtualClass::e1_block(ring);
    RootElem lhs(Rat(1)), prod(Rat(1));
    for (const auto& [m, k] : V.lines()) {
        (void)k;
        std::vector<int> minv = m;
        for (auto& e : minv) e = -e;
        lhs *= RootElem(Rat(1)) - RootElem::monomial(minv);
        prod *= RootElem(Rat(1)) - RootElem::monomial(m);
    }
    RootElem rhs = prod * V.dual().det();
    if (rank % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

} // namespace vw
