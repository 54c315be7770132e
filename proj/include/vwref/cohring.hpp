#pragma once

#include "vwref/parse.hpp"
#include "vwref/ratfunc.hpp"

#include <memory>
#include <string>
#include <vector>

namespace vw {

class CohRing;
using RingPtr = std::shared_ptr<const CohRing>;

/// Element of a CohRing: one RatFunc coefficient per basis element.
/// Belongs to exactly one ring; mixed-ring arithmetic throws MixedRings.
class CohClass {
public:
    CohClass() = default;
    CohClass(RingPtr ring);     // zero class
    CohClass(RingPtr ring, const RatFunc& scalar);

    const RingPtr& ring() const { return ring_; }
    const RatFunc& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
    void set_coeff(int i, const RatFunc& v) { coeffs_.at(static_cast<size_t>(i)) = v; }

    bool is_zero() const;
    /// Coefficient of the unit (degree-0) basis element.
    const RatFunc& degree0() const;
    /// The part of the class in cohomological degree d.
    CohClass degree_part(int d) const;

    CohClass operator-() const;
    CohClass operator+(const CohClass& o) const;
    CohClass operator-(const CohClass& o) const;
    CohClass operator*(const CohClass& o) const;
    CohClass operator*(const RatFunc& c) const;
    CohClass& operator+=(const CohClass& o) { return *this = *this + o; }
    CohClass& operator-=(const CohClass& o) { return *this = *this - o; }
    CohClass& operator*=(const CohClass& o) { return *this = *this * o; }
    bool operator==(const CohClass& o) const;
    bool operator!=(const CohClass& o) const { return !(*this == o); }

    CohClass pow(long e) const;    // e >= 0

    std::string str() const;

private:
    friend class CohRing;
    RingPtr ring_;
    std::vector<RatFunc> coeffs_;
};

inline CohClass operator*(const RatFunc& c, const CohClass& x) { return x * c; }

/// Finite-dimensional truncated even-degree graded-commutative ring with an
/// integration functional, in complex dimension <= 2. Immutable once built.
class CohRing : public std::enable_shared_from_this<CohRing> {
public:
    struct Builder {
        std::string name;
        int complex_dim = 0;
        std::vector<std::string> basis_names;
        std::vector<int> degrees;
        // off-diagonal products, (i, j, k, coeff): e_i * e_j = sum coeff * e_k
        std::vector<std::tuple<int, int, int, ParamPoly>> products;
        std::vector<std::pair<int, ParamPoly>> integrals;

        int add_basis(const std::string& n, int degree);
        void set_product(int i, int j, const std::vector<std::pair<int, ParamPoly>>& terms);
        void set_integral(int i, const ParamPoly& w);
        /// Validates unit, grading, commutativity and associativity.
        RingPtr build() const;
    };

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(basis_names_.size()); }
    int complex_dim() const { return complex_dim_; }
    int top_degree() const { return 2 * complex_dim_; }
    const std::string& basis_name(int i) const { return basis_names_.at(static_cast<size_t>(i)); }
    int degree(int i) const { return degrees_.at(static_cast<size_t>(i)); }
    int index_of(const std::string& n) const;   // -1 if absent

    CohClass zero() const;
    CohClass unit() const;
    CohClass scalar(const RatFunc& c) const;
    CohClass basis_class(int i) const;

    const std::vector<std::pair<int, ParamPoly>>& product(int i, int j) const;
    const ParamPoly& integral_weight(int i) const;

    // --- built-ins -------------------------------------------------------
    /// A reduced point.
    static RingPtr point();
    /// Curve with generator k = c1 of the canonical bundle, int k = 2g-2.
    /// genus: symbolic ParamPoly (e.g. the symbol g) or a constant.
    static RingPtr curve(const ParamPoly& genus);
    /// C x C truncated to the span of {1, a, b, D, vol} where a = k x 1,
    /// b = 1 x k, D the diagonal class:
    ///   a^2 = b^2 = 0, a*b = chi^2 vol, a*D = b*D = -chi vol, D^2 = chi vol
    /// with chi = 2 - 2g and int vol = 1.
    static RingPtr cxc(const ParamPoly& genus);
    /// Surface with generator kappa = c1(K_S), kappa^2 = (g-1) pt and
    /// int pt = 1; degree-4 classes with symbolic c2 enter as c2*pt.
    static RingPtr surface(const ParamPoly& genus);

    /// Parses a "ring <name> { ... }" declarative block; see docs/README.
    static RingPtr from_text(const std::string& text);

    std::string to_text() const;

private:
    CohRing() = default;
    std::string name_;
    int complex_dim_ = 0;
    std::vector<std::string> basis_names_;
    std::vector<int> degrees_;
    std::vector<std::vector<std::vector<std::pair<int, ParamPoly>>>> table_;
    std::vector<ParamPoly> integrals_;
    int unit_index_ = 0;
};

/// exp(x) = 1 + x + x^2/2 + ... truncated by nilpotency. Throws NonNilpotent
/// if the degree-0 part of x is nonzero.
CohClass exp_class(const CohClass& x);

/// The integration functional applied to the top-degree part.
RatFunc integrate(const CohClass& x);

/// Todd class recovered from the Chern character of a (virtual) tangent
/// bundle: 1 + c1/2 + (c1^2 + c2)/12 with c1 = ch1 and c2 = ch1^2/2 - ch2.
/// rank must equal the degree-0 part of chT.
CohClass todd_from_tangent_ch(const CohClass& chT, long rank);

/// Geometric-series inverse of a class with invertible degree-0 part.
CohClass invert_unit(const CohClass& x);

/// Evaluates an expression over the ring's basis names, declared parameter
/// symbols and integer bindings.
CohClass eval_cohclass(const ExprPtr& e, const RingPtr& ring, const Bindings& binds);
CohClass parse_cohclass(const std::string& src, const RingPtr& ring, const Bindings& binds = {});

} // namespace vw
