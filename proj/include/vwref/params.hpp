#pragma once

#include "vwref/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vw {

/// Registry of parameter symbols. Symbols are declared once and identified
/// by their declaration index; printing follows declaration order. "g" and
/// "c2" are pre-declared.
class ParamRegistry {
public:
    static ParamRegistry& instance();

    /// Declares a symbol (no-op if already present), returns its index.
    int declare(const std::string& name);
    /// Index of a declared symbol, or nullopt.
    std::optional<int> find(const std::string& name) const;
    const std::string& name(int index) const;
    int size() const { return static_cast<int>(names_.size()); }

private:
    ParamRegistry();
    std::vector<std::string> names_;
};

/// Exponent vector over the registry, trailing zeros trimmed.
using Monomial = std::vector<int>;

/// Total order on monomials: ascending total degree, then descending
/// lexicographic on exponents in declaration order; gives g < c2 among the
/// degree-1 monomials and the constant monomial first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in the declared parameter symbols with exact rational
/// coefficients. The term map is the canonical representation: no zero
/// coefficients, monomials in the fixed total order.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rat& c);      // NOLINT: implicit by design
    ParamPoly(long c) : ParamPoly(Rat(c)) {}

    /// The symbol with the given name as a degree-1 polynomial.
    /// Throws UndeclaredParameter if not in the registry.
    static ParamPoly symbol(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; throws if not constant.
    Rat constant_value() const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly operator*(const Rat& c) const;
    ParamPoly& operator*=(const Rat& c);
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }
    /// Arbitrary strict order, usable as a map key.
    bool operator<(const ParamPoly& o) const;

    ParamPoly pow(long e) const;    // e >= 0

    /// Substitute rational values for (a subset of) the symbols.
    ParamPoly substitute(const std::map<std::string, Rat>& values) const;

    /// Sum of all coefficients times evaluated monomials; all symbols must
    /// be assigned.
    Rat evaluate(const std::map<std::string, Rat>& values) const;

    const std::map<Monomial, Rat, MonomialOrder>& terms() const { return terms_; }

    /// "2 - 2*g", "1/2*g^2*c2", "0".
    std::string str() const;

    void add_term(const Monomial& m, const Rat& c);

private:
    std::map<Monomial, Rat, MonomialOrder> terms_;
};

inline ParamPoly operator*(const Rat& c, const ParamPoly& p) { return p * c; }

} // namespace vw
