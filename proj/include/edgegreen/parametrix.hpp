#pragma once

#include "edgegreen/opsymbol.hpp"
#include "edgegreen/ratfuncw.hpp"

#include <vector>

namespace edgegreen {

/// Sector-restricted symbol with rational w-dependence: a finite sum of
/// terms r^n * f(w) * (covariable monomial).  Covariables are degenerate
/// (r*eta), so a term's total r-order is rpow + cov.degree().
class SectorExpr {
public:
    struct Key {
        int rpow = 0;
        CovMono cov;
        friend bool operator<(const Key& a, const Key& b) {
            return std::tie(a.rpow, a.cov) < std::tie(b.rpow, b.cov);
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.rpow == b.rpow && a.cov == b.cov;
        }
    };

    SectorExpr() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, RatFuncW>& terms() const { return terms_; }
    void add(const Key& k, const RatFuncW& f);

    SectorExpr operator-() const;
    SectorExpr& operator+=(const SectorExpr& o);
    SectorExpr& operator-=(const SectorExpr& o);
    friend SectorExpr operator+(SectorExpr a, const SectorExpr& b) { return a += b; }
    friend SectorExpr operator-(SectorExpr a, const SectorExpr& b) { return a -= b; }
    friend SectorExpr operator*(const Coefficient& c, SectorExpr s);
    friend bool operator==(const SectorExpr& a, const SectorExpr& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SectorExpr& a, const SectorExpr& b) { return !(a == b); }

    SectorExpr mul_rpow(int k) const;
    /// Keep the component with the given flatness and covariable degree.
    SectorExpr component(int rpow, int covdeg) const;
    /// -i d/dy for y one of {t, theta2, phi2} (indexed like the covariables).
    SectorExpr deriv_y(Cov y) const;
    /// (-r d_r) acts on a term of flatness n and covariable degree j as
    /// multiplication by -(n + j).
    SectorExpr euler() const;

    std::string str() const;

private:
    std::map<Key, RatFuncW> terms_;
};

/// Polynomial counterpart (w-polynomial values); used for the Hamiltonian
/// side of the defining equations.
class SectorPoly {
public:
    using Key = SectorExpr::Key;

    SectorPoly() = default;

    const std::map<Key, PolyW>& terms() const { return terms_; }
    void add(const Key& k, const PolyW& p);

    static SectorPoly from_opsymbol(const OpSymbol& sym, int l);

    SectorPoly shift_w(const Rational& m) const;
    SectorPoly mul_rpow(int k) const;
    SectorPoly deriv_w() const;
    SectorPoly deriv_cov(Cov v) const;
    SectorPoly deriv_y(Cov y) const;
    int max_w_degree() const;
    int max_cov_degree() const;

private:
    std::map<Key, PolyW> terms_;
};

/// Leibniz-Mellin product sum_{k,alpha} (1/k! alpha!) d_w^k d_eta^alpha A
/// applied against (-r d_r)^k D_y^alpha B.
SectorExpr leibniz(const SectorPoly& A, const SectorExpr& B);

// ---------------------------------------------------------------------------

/// b_0 = 1/h0, b_n = b_{n-1} / (h0 - 2n(2w-5-2n)), sector-restricted.
std::vector<RatFuncW> b_seq(int n_max, int l);

/// One parametrix symbol d^(k)_{n,j} restricted to sector l, stored as
/// (rational function of w) x (covariable polynomial of degree j) x r^n.
struct SectorSymbol {
    int level = 0;
    int flatness = 0;
    int eta_order = 0;
    int sector = 0;
    RatFuncW core;
    CovPoly cov;
    int rpow = 0;

    bool is_zero() const { return core.is_zero() || cov.is_zero(); }
    SectorExpr expr() const;
};

/// Closed-form d^(k)_{n,j}.  Implemented ranges: k=0 with n <= 2 and
/// j <= 4 - n; k=1 with (n,j) in {(0,0),(0,1),(1,0)}; k=2 with (0,0).
/// Parity zeros inside those ranges come back as exact zero symbols.
SectorSymbol compute_d(int k, int n, int j, int l);

/// The truncated expansion of a_k^(-1) as in the summary displays: the list
/// of -2t^2 d^(k)_{n,j} terms present through the given flatness order.
std::vector<SectorSymbol> mellin_symbol_expansion(int k, int order, int l);

/// Residual of the order-0/1/2 defining equations with the closed-form
/// symbols inserted; the zero symbol iff the recursion is satisfied.
/// `mutate_zero` (tests only) zeroes one d^(0) entry to confirm sensitivity.
SectorExpr verify_defining_equations(int order, int l);
SectorExpr verify_defining_equations_mutated(int order, int l, int mut_n, int mut_j);

/// Generic level-0 recursion solver (independent of the closed forms):
/// returns Q_{n,j} = -2t^2 d^(0)_{n,j} for n <= 2, j <= jmax.
std::map<std::pair<int, int>, SectorExpr> solve_level0(int jmax, int l);

/// sigma_c^{-2-j}(p_{M,k}) = -2t^2 sum_m d^(k)_{j-k-m,m}; zero for j < k.
SectorExpr conormal(int k, int j, int l);

struct PoleReport {
    std::string symbol;
    int sector = 0;
    std::map<Rational, int> poles;
    /// true = strictly right of the contour Re w = 7/2 - gamma.
    std::map<Rational, bool> right_of_contour;
};

std::vector<PoleReport> pole_census(const std::vector<int>& levels, int l_max,
                                    const Rational& gamma);

} // namespace edgegreen
