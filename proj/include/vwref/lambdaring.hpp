#pragma once

#include "vwref/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace vw {

/// Split K-theory of formal Chern-root line classes: exact-rational Laurent
/// polynomials in invertible root variables x_1..x_nx (the E0 block) and
/// y_1..y_ny (the E1 block).
class RootRing {
public:
    RootRing(int nx, int ny) : nx_(nx), ny_(ny) {}
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int vars() const { return nx_ + ny_; }
    std::string var_name(int i) const;

private:
    int nx_, ny_;
};

/// Element of a RootRing; the exponent vector may be negative (roots are
/// invertible line classes).
class RootElem {
public:
    RootElem() = default;
    explicit RootElem(const Rat& c);

    static RootElem monomial(const std::vector<int>& exps, const Rat& c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    RootElem operator-() const;
    RootElem operator+(const RootElem& o) const;
    RootElem operator-(const RootElem& o) const;
    RootElem operator*(const RootElem& o) const;
    RootElem& operator+=(const RootElem& o) { return *this = *this + o; }
    RootElem& operator*=(const RootElem& o) { return *this = *this * o; }
    bool operator==(const RootElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const RootElem& o) const { return !(*this == o); }

    /// Swap the exponents of variables i and j in every monomial.
    RootElem swapped(int i, int j) const;
    /// Invariance under permutations of a variable range [lo, hi).
    bool symmetric_in(int lo, int hi) const;

    std::string str(const RootRing& ring) const;

    void add_term(const std::vector<int>& exps, const Rat& c);

private:
    std::map<std::vector<int>, Rat> terms_;
};

/// A virtual class presented as line monomials with integer multiplicities.
class VirtualClass {
public:
    VirtualClass() = default;

    /// x_1 + ... + x_r0 over RootRing(r0, r1).
    static VirtualClass e0_block(const RootRing& ring);
    /// y_1 + ... + y_r1.
    static VirtualClass e1_block(const RootRing& ring);
    /// The trivial line (monomial 1).
    static VirtualClass trivial(const RootRing& ring, int mult = 1);

    VirtualClass& add_line(const std::vector<int>& exps, int mult = 1);
    VirtualClass operator+(const VirtualClass& o) const;
    VirtualClass operator-() const;
    VirtualClass operator-(const VirtualClass& o) const { return *this + (-o); }
    VirtualClass dual() const;

    const std::vector<std::pair<std::vector<int>, int>>& lines() const { return lines_; }
    RootElem det() const;
    long rank() const;

private:
    std::vector<std::pair<std::vector<int>, int>> lines_;
};

/// Coefficients 0..k of the total exterior power series
/// Lambda_u(v) = prod (1 + u L)^(mult), negative multiplicities expanded as
/// geometric series.
std::vector<RootElem> lambda_series(const VirtualClass& v, int order);

/// Coefficient of u^k in Lambda_u(v).
RootElem exterior(int k, const VirtualClass& v);

/// Complete homogeneous piece: coefficient of u^k in Sym_u(v) = 1/Lambda_-u(v).
RootElem symmetric(int k, const VirtualClass& v);

/// Verifies that the Koszul pushforward of the degeneracy-locus resolution
/// equals 1 - det(E0 - E1) Lambda^(r1-r0)(E1 - E0) in the root ring, for
/// generic split bundles of ranks 1 <= r0 <= r1. Throws RankOrder if
/// r0 > r1.
bool eagon_northcott_check(int r0, int r1);

/// For a split class V of the given rank: the alternating sum of exterior
/// powers of V^* equals 1 - det(V)^(-1) Lambda^(rank-1)(V - O).
bool corollary_lambda_check(int rank);

/// prod (1 - L_i^(-1)) = (-1)^rank prod (1 - L_i) prod L_i^(-1) for a split
/// class of the given rank.
bool duality_identity_check(int rank);

} // namespace vw
