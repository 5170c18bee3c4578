#pragma once

#include "edgegreen/polyw.hpp"

#include <array>
#include <map>

namespace edgegreen {

/// Monomial in the edge covariables (tau, Theta2, Phi2).  Throughout the
/// symbol calculus these are the degenerate covariables r*eta, so the
/// monomial degree doubles as the r-eta homogeneity order.
struct CovMono {
    std::array<int8_t, 3> e{0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2]; }
    friend bool operator<(const CovMono& a, const CovMono& b) { return a.e < b.e; }
    friend bool operator==(const CovMono& a, const CovMono& b) { return a.e == b.e; }
};

enum class Cov : int { Tau = 0, Theta2 = 1, Phi2 = 2 };

/// Polynomial in the edge covariables with scalar (t, theta2)-dependent
/// coefficients.
class CovPoly {
public:
    CovPoly() = default;
    CovPoly(Coefficient c);

    static CovPoly cov(Cov v, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<CovMono, Coefficient>& terms() const { return terms_; }
    void add(const CovMono& m, const Coefficient& c);
    int max_degree() const;

    CovPoly operator-() const;
    CovPoly& operator+=(const CovPoly& o);
    CovPoly& operator-=(const CovPoly& o);
    friend CovPoly operator+(CovPoly a, const CovPoly& b) { return a += b; }
    friend CovPoly operator-(CovPoly a, const CovPoly& b) { return a -= b; }
    friend CovPoly operator*(const CovPoly& a, const CovPoly& b);
    friend CovPoly operator*(const Coefficient& c, CovPoly p);
    friend bool operator==(const CovPoly& a, const CovPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const CovPoly& a, const CovPoly& b) { return !(a == b); }

    /// Partial derivative in one covariable.
    CovPoly deriv_cov(Cov v) const;
    /// Keep only the terms of the given covariable degree.
    CovPoly part_of_degree(int deg) const;

    std::string str() const;

private:
    std::map<CovMono, Coefficient> terms_;
};

enum class CKind { C0, C1, C2, C1Tilde };

/// The covariable polynomials of the second-order calculus:
///   C0 = t^2 tau^2 + Theta2^2 + cs Phi2^2,  C1 = -5 t tau - ct Theta2,
///   C2 = Theta2^2 + cs Phi2^2,  C1~ = C0 - 4 i t tau + i C1.
CovPoly build_C(CKind kind);

/// P_{1,2j+1} and P_{2,2}, the covariable polynomials of the level-0
/// recursion (homogeneous of orders 2j+1 and 2).
CovPoly build_P1(int j);
CovPoly build_P22();

// ---------------------------------------------------------------------------

enum class Edge { ElectronNucleus, ElectronElectron, Generic };

/// Z1 and Z2 for an edge; Generic keeps the formal generators.
Coefficient edge_Z1(Edge e);
Coefficient edge_Z2(Edge e);

/// Operator-valued Mellin symbol: a finite sum of terms
///   r^n * p(w) * L^lp * (covariable monomial with scalar coefficient),
/// L being the Laplace-Beltrami placeholder (lp is 0 or 1).
class OpSymbol {
public:
    struct Key {
        int rpow = 0;
        int lpow = 0;
        CovMono cov;
        friend bool operator<(const Key& a, const Key& b) {
            return std::tie(a.rpow, a.lpow, a.cov) < std::tie(b.rpow, b.lpow, b.cov);
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.rpow == b.rpow && a.lpow == b.lpow && a.cov == b.cov;
        }
    };

    OpSymbol() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, PolyW>& terms() const { return terms_; }
    void add(const Key& k, const PolyW& p);

    OpSymbol operator-() const;
    OpSymbol& operator+=(const OpSymbol& o);
    OpSymbol& operator-=(const OpSymbol& o);
    friend OpSymbol operator+(OpSymbol a, const OpSymbol& b) { return a += b; }
    friend OpSymbol operator-(OpSymbol a, const OpSymbol& b) { return a -= b; }
    friend OpSymbol operator*(const Coefficient& c, OpSymbol s);
    friend bool operator==(const OpSymbol& a, const OpSymbol& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const OpSymbol& a, const OpSymbol& b) { return !(a == b); }

    /// Multiply every term's r-power by prepending r^k.
    OpSymbol mul_rpow(int k) const;
    /// Drop terms with r-power above `order`.
    OpSymbol truncate_rpow(int order) const;
    int max_eta_degree() const;

    std::string str() const;

private:
    std::map<Key, PolyW> terms_;
};

/// The asymptotic Hamiltonian symbols of Theorem 1:
///   a0 = -(1/2t^2) T^2 h0 + (1/2t^2) r^2 C0,   h0 = (w-2)^2 - (w-2) + L
///   a1 = (i/2t^2) r C1 + Z1/t
///   a2 = -(4/3t^2) w - (1/6t^2) L + (1/2t^2) r^2 C2 + Z2/t
OpSymbol build_a(int level, Edge edge);

/// h0 as an OpSymbol (w-polynomial plus the L placeholder).
OpSymbol build_h0();

/// Remainders of the expansion: r s1 = a - a0, r^2 s2 = a - a0 - r a1,
/// r^3 s3 = a - a0 - r a1 - r^2 a2, truncated at `order` in r.
OpSymbol remainder_s(int k, int order, Edge edge = Edge::Generic);

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

/// Substitute L -> -l(l+1).
OpSymbol sector_restrict(const OpSymbol& sym, int l);

/// Sector restriction of h0: (w-3-l)(w-2+l) as a plain polynomial.
PolyW h0_sector(int l);

} // namespace edgegreen
