#include "vwref/eqkth.hpp"

#include "vwref/errors.hpp"

namespace vw {

Atom Atom::line(const CohClass& c1, int weight, int sign) {
    if (c1.degree_part(2) != c1)
        throw CalcError("Atom::line: c1 must be a degree-2 class");
    Atom a;
    a.kind = Kind::Line;
    a.c1 = c1;
    a.weight = weight;
    a.sign = sign;
    return a;
}

Atom Atom::rank2(const CohClass& ch, const CohClass& det_c1, int weight, int sign) {
    if (ch.degree0() != RatFunc(2))
        throw CalcError("Atom::rank2: Chern character must have degree-0 part 2");
    if (det_c1.degree_part(2) != det_c1)
        throw CalcError("Atom::rank2: det c1 must be a degree-2 class");
    Atom a;
    a.kind = Kind::Rank2;
    a.ch = ch;
    a.det = det_c1;
    a.c1 = det_c1.ring()->zero();
    a.weight = weight;
    a.sign = sign;
    return a;
}

Atom Atom::trivial(const RingPtr& ring, int weight, int sign) {
    Atom a;
    a.kind = Kind::Trivial;
    a.c1 = ring->zero();
    a.weight = weight;
    a.sign = sign;
    return a;
}

Atom Atom::dual() const {
    Atom d = *this;
    d.weight = -weight;
    switch (kind) {
    case Kind::Line:
        d.c1 = -c1;
        break;
    case Kind::Rank2:
        // ch(E^*) = rank - ch1 + ch2
        d.ch = ch - ch.degree_part(2) * RatFunc(2);
        d.det = -det;
        break;
    case Kind::Trivial:
        break;
    }
    return d;
}

bool Atom::operator==(const Atom& o) const {
    if (kind != o.kind || weight != o.weight || sign != o.sign) return false;
    switch (kind) {
    case Kind::Line: return c1 == o.c1;
    case Kind::Rank2: return ch == o.ch && det == o.det;
    case Kind::Trivial: return true;
    }
    return false;
}

EqKClass::EqKClass(RingPtr ring, std::vector<Atom> atoms)
    : ring_(std::move(ring)), atoms_(std::move(atoms)) {
    for (const auto& a : atoms_)
        if (a.kind != Atom::Kind::Trivial && a.det_c1().ring() != ring_)
            throw MixedRings("EqKClass: atom over a different ring");
}

void EqKClass::add(const Atom& a) { atoms_.push_back(a); }

EqKClass EqKClass::operator+(const EqKClass& o) const {
    if (ring_ != o.ring_) throw MixedRings("EqKClass: sum over different rings");
    EqKClass out = *this;
    for (const auto& a : o.atoms_) out.atoms_.push_back(a);
    return out;
}

EqKClass EqKClass::operator-() const {
    EqKClass out = *this;
    for (auto& a : out.atoms_) a.sign = -a.sign;
    return out;
}

long EqKClass::rank() const {
    long r = 0;
    for (const auto& a : atoms_) r += a.sign * a.rank();
    return r;
}

bool EqKClass::all_weights_nonzero() const {
    for (const auto& a : atoms_)
        if (a.weight == 0) return false;
    return true;
}

bool EqKClass::operator==(const EqKClass& o) const {
    return ring_ == o.ring_ && atoms_ == o.atoms_;
}

CohClass ch(const EqKClass& x) {
    CohClass out = x.ring()->zero();
    for (const auto& a : x.atoms()) {
        CohClass piece = x.ring()->zero();
        switch (a.kind) {
        case Atom::Kind::Line:
            piece = exp_class(a.c1) * RatFunc::s_power(a.weight);
            break;
        case Atom::Kind::Rank2:
            piece = a.ch * RatFunc::s_power(a.weight);
            break;
        case Atom::Kind::Trivial:
            piece = x.ring()->scalar(RatFunc::s_power(a.weight));
            break;
        }
        out += (a.sign > 0) ? piece : -piece;
    }
    return out;
}

CohClass lambda_minus_one(const EqKClass& x) {
    CohClass out = x.ring()->unit();
    for (const auto& a : x.atoms()) {
        CohClass factor = x.ring()->unit();
        RatFunc sw = RatFunc::s_power(a.weight);
        switch (a.kind) {
        case Atom::Kind::Line:
            factor -= exp_class(a.c1) * sw;
            break;
        case Atom::Kind::Rank2:
            factor = factor - a.ch * sw + exp_class(a.det) * RatFunc::s_power(2 * a.weight);
            break;
        case Atom::Kind::Trivial:
            factor -= x.ring()->scalar(sw);
            break;
        }
        if (a.sign > 0) {
            out *= factor;
        } else {
            if (a.weight == 0)
                throw ZeroWeightDenominator(
                    "lambda_minus_one: weight-0 atom requires inversion (fixed direction left "
                    "in the moving part)");
            out *= invert_unit(factor);
        }
    }
    return out;
}

EqKClass dual(const EqKClass& x) {
    EqKClass out(x.ring());
    for (const auto& a : x.atoms()) out.add(a.dual());
    return out;
}

std::pair<CohClass, long> det_line(const EqKClass& x) {
    CohClass c1 = x.ring()->zero();
    long sexp = 0;
    for (const auto& a : x.atoms()) {
        CohClass d = a.det_c1();
        c1 += (a.sign > 0) ? d : -d;
        sexp += a.sign * a.rank() * a.weight;
    }
    return {c1, sexp};
}

SqrtKvir sqrt_Kvir(const EqKClass& e_dot) {
    EqKClass nonneg(e_dot.ring());
    for (const auto& a : e_dot.atoms()) {
        // the weight pairing i <-> -i-1 behind the square root needs honest
        // integer T-weights
        if (a.weight % 2 != 0)
            throw CalcError("sqrt_Kvir: odd s-exponent is not an honest T-weight");
        if (a.weight >= 0) nonneg.add(a);
    }
    auto [c1, sexp] = det_line(nonneg);
    return SqrtKvir{c1, sexp + nonneg.rank()};
}

} // namespace vw
