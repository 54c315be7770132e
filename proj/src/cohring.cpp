#include "vwref/cohring.hpp"

#include "vwref/errors.hpp"

#include <sstream>

namespace vw {

// ---------------------------------------------------------------- CohClass

CohClass::CohClass(RingPtr ring) : ring_(std::move(ring)) {
    coeffs_.assign(static_cast<size_t>(ring_->dim()), RatFunc());
}

CohClass::CohClass(RingPtr ring, const RatFunc& scalar) : CohClass(std::move(ring)) {
    coeffs_[static_cast<size_t>(0)] = scalar;  // unit index is 0 by construction
}

bool CohClass::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

const RatFunc& CohClass::degree0() const { return coeffs_.at(0); }

CohClass CohClass::degree_part(int d) const {
    CohClass out(ring_);
    for (int i = 0; i < ring_->dim(); ++i)
        if (ring_->degree(i) == d) out.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)];
    return out;
}

static void require_same_ring(const CohClass& a, const CohClass& b) {
    if (a.ring() != b.ring())
        throw MixedRings("arithmetic between classes of different rings ('" +
                         (a.ring() ? a.ring()->name() : "<none>") + "' vs '" +
                         (b.ring() ? b.ring()->name() : "<none>") + "')");
}

CohClass CohClass::operator-() const {
    CohClass out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CohClass CohClass::operator+(const CohClass& o) const {
    require_same_ring(*this, o);
    CohClass out = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
    return out;
}

CohClass CohClass::operator-(const CohClass& o) const {
    require_same_ring(*this, o);
    CohClass out = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
    return out;
}

CohClass CohClass::operator*(const CohClass& o) const {
    require_same_ring(*this, o);
    CohClass out(ring_);
    for (int i = 0; i < ring_->dim(); ++i) {
        if (coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < ring_->dim(); ++j) {
            if (o.coeffs_[static_cast<size_t>(j)].is_zero()) continue;
            RatFunc cc = coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
            for (const auto& [k, w] : ring_->product(i, j))
                out.coeffs_[static_cast<size_t>(k)] += cc * RatFunc(w);
        }
    }
    return out;
}

CohClass CohClass::operator*(const RatFunc& c) const {
    CohClass out = *this;
    for (auto& v : out.coeffs_) v *= c;
    return out;
}

bool CohClass::operator==(const CohClass& o) const {
    require_same_ring(*this, o);
    return coeffs_ == o.coeffs_;
}

CohClass CohClass::pow(long e) const {
    if (e < 0) throw CalcError("CohClass::pow: negative exponent");
    CohClass out = ring_->unit();
    CohClass base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::string CohClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < ring_->dim(); ++i) {
        const RatFunc& c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        if (i != 0) os << "*" << ring_->basis_name(i);
    }
    return first ? "0" : os.str();
}

// ----------------------------------------------------------------- CohRing

int CohRing::Builder::add_basis(const std::string& n, int degree) {
    basis_names.push_back(n);
    degrees.push_back(degree);
    return static_cast<int>(basis_names.size()) - 1;
}

void CohRing::Builder::set_product(int i, int j,
                                   const std::vector<std::pair<int, ParamPoly>>& terms) {
    for (const auto& [k, c] : terms) products.emplace_back(i, j, k, c);
}

void CohRing::Builder::set_integral(int i, const ParamPoly& w) { integrals.emplace_back(i, w); }

RingPtr CohRing::Builder::build() const {
    auto ring = std::shared_ptr<CohRing>(new CohRing());
    ring->name_ = name;
    ring->complex_dim_ = complex_dim;
    ring->basis_names_ = basis_names;
    ring->degrees_ = degrees;
    int n = static_cast<int>(basis_names.size());
    if (n == 0 || degrees[0] != 0)
        throw CalcError("ring '" + name + "': first basis element must have degree 0 (unit)");
    for (int i = 0; i < n; ++i) {
        if (degrees[static_cast<size_t>(i)] % 2 != 0)
            throw CalcError("ring '" + name + "': odd-degree basis element");
        if (i > 0 && degrees[static_cast<size_t>(i)] == 0)
            throw CalcError("ring '" + name + "': multiple degree-0 elements");
    }

    ring->table_.assign(static_cast<size_t>(n), {});
    for (auto& row : ring->table_) row.assign(static_cast<size_t>(n), {});
    auto put = [&](int i, int j, int k, const ParamPoly& c) {
        if (c.is_zero()) return;
        int d = ring->degrees_[static_cast<size_t>(i)] + ring->degrees_[static_cast<size_t>(j)];
        if (d > ring->top_degree())
            throw CalcError("ring '" + name + "': product entry above top degree");
        if (ring->degrees_[static_cast<size_t>(k)] != d)
            throw CalcError("ring '" + name + "': product entry violates grading");
        ring->table_[static_cast<size_t>(i)][static_cast<size_t>(j)].emplace_back(k, c);
    };
    // unit law
    for (int i = 0; i < n; ++i) {
        put(0, i, i, ParamPoly(Rat(1)));
        if (i != 0) put(i, 0, i, ParamPoly(Rat(1)));
    }
    for (const auto& [i, j, k, c] : products) {
        if (i == 0 || j == 0) throw CalcError("ring '" + name + "': unit products are implicit");
        put(i, j, k, c);
        if (i != j) put(j, i, k, c);  // commutative (even degrees only)
    }

    ring->integrals_.assign(static_cast<size_t>(n), ParamPoly());
    for (const auto& [i, w] : integrals) {
        if (ring->degrees_[static_cast<size_t>(i)] != ring->top_degree())
            throw CalcError("ring '" + name + "': integral weight on non-top degree");
        ring->integrals_[static_cast<size_t>(i)] = w;
    }

    // associativity on all basis triples
    RingPtr r = ring;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                CohClass a = r->basis_class(i), b = r->basis_class(j), c = r->basis_class(k);
                if ((a * b) * c != a * (b * c))
                    throw CalcError("ring '" + name + "': product not associative on (" +
                                    r->basis_name(i) + ", " + r->basis_name(j) + ", " +
                                    r->basis_name(k) + ")");
            }
    return r;
}

int CohRing::index_of(const std::string& n) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_names_[static_cast<size_t>(i)] == n) return i;
    return -1;
}

CohClass CohRing::zero() const { return CohClass(shared_from_this()); }
CohClass CohRing::unit() const { return scalar(RatFunc(1)); }

CohClass CohRing::scalar(const RatFunc& c) const { return CohClass(shared_from_this(), c); }

CohClass CohRing::basis_class(int i) const {
    CohClass out(shared_from_this());
    out.set_coeff(i, RatFunc(1));
    return out;
}

const std::vector<std::pair<int, ParamPoly>>& CohRing::product(int i, int j) const {
    return table_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
}

const ParamPoly& CohRing::integral_weight(int i) const {
    return integrals_.at(static_cast<size_t>(i));
}

RingPtr CohRing::point() {
    static RingPtr ring = [] {
        Builder b;
        b.name = "point";
        b.complex_dim = 0;
        b.add_basis("one", 0);
        b.set_integral(0, ParamPoly(Rat(1)));
        return b.build();
    }();
    return ring;
}

static RingPtr make_curve(const ParamPoly& genus, const std::string& name) {
    CohRing::Builder b;
    b.name = name;
    b.complex_dim = 1;
    b.add_basis("one", 0);
    int k = b.add_basis("k", 2);
    b.set_product(k, k, {});
    b.set_integral(k, genus * Rat(2) - ParamPoly(Rat(2)));
    return b.build();
}

static std::string genus_tag(const ParamPoly& genus) {
    return genus.is_constant() ? rat_str(genus.constant_value()) : genus.str();
}

RingPtr CohRing::curve(const ParamPoly& genus) {
    return make_curve(genus, "curve(" + genus_tag(genus) + ")");
}

RingPtr CohRing::cxc(const ParamPoly& genus) {
    Builder b;
    b.name = "cxc(" + genus_tag(genus) + ")";
    b.complex_dim = 2;
    b.add_basis("one", 0);
    int a = b.add_basis("a", 2);
    int bb = b.add_basis("b", 2);
    int D = b.add_basis("D", 2);
    int vol = b.add_basis("vol", 4);
    ParamPoly chi = ParamPoly(Rat(2)) - genus * Rat(2);
    b.set_product(a, a, {});
    b.set_product(bb, bb, {});
    b.set_product(a, bb, {{vol, chi * chi}});
    b.set_product(a, D, {{vol, -chi}});
    b.set_product(bb, D, {{vol, -chi}});
    b.set_product(D, D, {{vol, chi}});
    b.set_integral(vol, ParamPoly(Rat(1)));
    return b.build();
}

RingPtr CohRing::surface(const ParamPoly& genus) {
    Builder b;
    b.name = "surface(" + genus_tag(genus) + ")";
    b.complex_dim = 2;
    b.add_basis("one", 0);
    int kap = b.add_basis("kappa", 2);
    int pt = b.add_basis("pt", 4);
    b.set_product(kap, kap, {{pt, genus - ParamPoly(Rat(1))}});
    b.set_integral(pt, ParamPoly(Rat(1)));
    return b.build();
}

// ------------------------------------------------------- declarative text

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

// (index, coefficient) terms of a linear combination of basis elements,
// evaluated over a product-free copy of the ring under construction
std::vector<std::pair<int, ParamPoly>> linear_terms(const std::string& src, const RingPtr& ring) {
    CohClass v = parse_cohclass(src, ring, {});
    std::vector<std::pair<int, ParamPoly>> out;
    for (int i = 0; i < ring->dim(); ++i)
        if (!v.coeff(i).is_zero()) out.emplace_back(i, v.coeff(i).param_value());
    return out;
}

} // namespace

RingPtr CohRing::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Builder b;
    bool in_block = false, done = false;
    struct Pending { std::string a, bname, rhs; bool integral; };
    std::vector<Pending> pending;
    while (std::getline(is, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = strip(line);
        if (line.empty()) continue;
        auto toks = split_ws(line);
        if (!in_block) {
            if (toks.size() == 3 && toks[0] == "ring" && toks[2] == "{") {
                b.name = toks[1];
                in_block = true;
                continue;
            }
            throw ParseError("ring text: expected 'ring <name> {', got '" + line + "'");
        }
        if (toks[0] == "}") {
            done = true;
            break;
        }
        if (toks[0] == "dim" && toks.size() == 2) {
            b.complex_dim = std::stoi(toks[1]);
        } else if (toks[0] == "basis") {
            for (size_t i = 1; i < toks.size(); ++i) {
                auto c = toks[i].find(':');
                if (c == std::string::npos)
                    throw ParseError("ring text: basis entries are name:degree");
                b.add_basis(toks[i].substr(0, c), std::stoi(toks[i].substr(c + 1)));
            }
        } else if (toks[0] == "product" && toks.size() >= 5 && toks[3] == "=") {
            size_t eq = line.find('=');
            pending.push_back({toks[1], toks[2], strip(line.substr(eq + 1)), false});
        } else if (toks[0] == "integral" && toks.size() >= 4 && toks[2] == "=") {
            size_t eq = line.find('=');
            pending.push_back({toks[1], "", strip(line.substr(eq + 1)), true});
        } else {
            throw ParseError("ring text: unrecognized line '" + line + "'");
        }
    }
    if (!done) throw ParseError("ring text: missing closing '}'");

    // product-free ring of the same basis, used to evaluate the right-hand
    // sides as linear combinations
    Builder shell;
    shell.name = b.name;
    shell.complex_dim = b.complex_dim;
    shell.basis_names = b.basis_names;
    shell.degrees = b.degrees;
    RingPtr proto = shell.build();

    auto idx = [&](const std::string& n) {
        int i = proto->index_of(n);
        if (i < 0) throw ParseError("ring text: unknown basis element '" + n + "'");
        return i;
    };
    for (const auto& p : pending) {
        if (p.integral) {
            auto terms = linear_terms(p.rhs, proto);
            if (terms.size() > 1 || (terms.size() == 1 && terms[0].first != 0))
                throw ParseError("ring text: integral weight must be a scalar");
            b.set_integral(idx(p.a), terms.empty() ? ParamPoly() : terms[0].second);
        } else {
            b.set_product(idx(p.a), idx(p.bname), linear_terms(p.rhs, proto));
        }
    }
    return b.build();
}

std::string CohRing::to_text() const {
    std::ostringstream os;
    os << "ring " << name_ << " {\n";
    os << "  dim " << complex_dim_ << "\n";
    os << "  basis";
    for (int i = 0; i < dim(); ++i) os << " " << basis_name(i) << ":" << degree(i);
    os << "\n";
    for (int i = 1; i < dim(); ++i)
        for (int j = i; j < dim(); ++j) {
            const auto& terms = product(i, j);
            if (degree(i) + degree(j) > top_degree()) continue;
            std::ostringstream rhs;
            bool first = true;
            for (const auto& [k, c] : terms) {
                if (!first) rhs << " + ";
                first = false;
                rhs << "(" << c.str() << ")*" << basis_name(k);
            }
            os << "  product " << basis_name(i) << " " << basis_name(j) << " = "
               << (first ? "0" : rhs.str()) << "\n";
        }
    for (int i = 0; i < dim(); ++i)
        if (!integral_weight(i).is_zero())
            os << "  integral " << basis_name(i) << " = " << integral_weight(i).str() << "\n";
    os << "}\n";
    return os.str();
}

// ------------------------------------------------------------- operations

CohClass exp_class(const CohClass& x) {
    if (!x.degree0().is_zero())
        throw NonNilpotent("exp_class: nonzero degree-0 part " + x.degree0().str());
    const RingPtr& ring = x.ring();
    CohClass out = ring->unit();
    CohClass p = ring->unit();
    Rat fact(1);
    for (int j = 1; j <= ring->complex_dim(); ++j) {
        p *= x;
        fact *= j;
        out += p * RatFunc(Rat(1) / fact);
    }
    return out;
}

RatFunc integrate(const CohClass& x) {
    RatFunc out;
    const RingPtr& ring = x.ring();
    for (int i = 0; i < ring->dim(); ++i) {
        const ParamPoly& w = ring->integral_weight(i);
        if (!w.is_zero()) out += x.coeff(i) * RatFunc(w);
    }
    return out;
}

CohClass todd_from_tangent_ch(const CohClass& chT, long rank) {
    const RingPtr& ring = chT.ring();
    if (ring->complex_dim() > 2)
        throw DimensionTooLarge("todd_from_tangent_ch: complex dimension > 2");
    if (chT.degree0() != RatFunc(Rat(rank)))
        throw CalcError("todd_from_tangent_ch: degree-0 part does not match rank");
    CohClass c1 = chT.degree_part(2);
    CohClass ch2 = chT.degree_part(4);
    CohClass c1sq = c1 * c1;
    CohClass c2 = c1sq * RatFunc(Rat(1, 2)) - ch2;
    return ring->unit() + c1 * RatFunc(Rat(1, 2)) + (c1sq + c2) * RatFunc(Rat(1, 12));
}

CohClass invert_unit(const CohClass& x) {
    const RatFunc& u = x.degree0();
    if (u.is_zero()) throw NotInvertible("invert_unit: zero degree-0 part");
    const RingPtr& ring = x.ring();
    RatFunc uinv = RatFunc(1) / u;
    CohClass n = (x - ring->scalar(u)) * uinv;  // nilpotent
    CohClass out = ring->unit();
    CohClass p = ring->unit();
    for (int j = 1; j <= ring->complex_dim(); ++j) {
        p *= n;
        out += p * RatFunc(Rat((j % 2 == 0) ? 1 : -1));
    }
    return out * uinv;
}

CohClass eval_cohclass(const ExprPtr& e, const RingPtr& ring, const Bindings& binds) {
    switch (e->op) {
    case Expr::Op::Num:
        return ring->scalar(RatFunc(e->value));
    case Expr::Op::Sym: {
        int i = ring->index_of(e->name);
        if (i >= 0) return ring->basis_class(i);
        auto it = binds.find(e->name);
        if (it != binds.end()) return ring->scalar(RatFunc(Rat(it->second)));
        if (e->name == "s") return ring->scalar(RatFunc::s_power(1));
        if (ParamRegistry::instance().find(e->name)) return ring->scalar(RatFunc::symbol(e->name));
        throw ParseError("unknown symbol '" + e->name + "' in class expression over ring '" +
                         ring->name() + "'");
    }
    case Expr::Op::Add:
        return eval_cohclass(e->lhs, ring, binds) + eval_cohclass(e->rhs, ring, binds);
    case Expr::Op::Sub:
        return eval_cohclass(e->lhs, ring, binds) - eval_cohclass(e->rhs, ring, binds);
    case Expr::Op::Mul:
        return eval_cohclass(e->lhs, ring, binds) * eval_cohclass(e->rhs, ring, binds);
    case Expr::Op::Div: {
        CohClass num = eval_cohclass(e->lhs, ring, binds);
        CohClass den = eval_cohclass(e->rhs, ring, binds);
        if (den != den.degree_part(0))
            throw ParseError("class division only by scalars");
        return num * (RatFunc(1) / den.degree0());
    }
    case Expr::Op::Neg:
        return -eval_cohclass(e->lhs, ring, binds);
    case Expr::Op::Pow: {
        long x = eval_integer(e->rhs, binds);
        if (x < 0) throw ParseError("negative power of a class");
        return eval_cohclass(e->lhs, ring, binds).pow(x);
    }
    }
    throw ParseError("corrupt expression");
}

CohClass parse_cohclass(const std::string& src, const RingPtr& ring, const Bindings& binds) {
    return eval_cohclass(parse_expression(src), ring, binds);
}

} // namespace vw
