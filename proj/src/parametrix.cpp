#include "edgegreen/parametrix.hpp"

#include <sstream>

namespace edgegreen {

namespace {

const Coefficient kI = Coefficient::imag_unit();
Coefficient t_pow(int k) { return Coefficient(Rational(1), mono_gen(Gen::T, k)); }
Coefficient minus2t2() { return Coefficient(-2) * t_pow(2); }

Coefficient deriv_y_coeff(const Coefficient& c, Cov y) {
    switch (y) {
    case Cov::Tau: return c.deriv_t();
    case Cov::Theta2: return c.deriv_theta2();
    case Cov::Phi2: return Coefficient();
    }
    throw std::logic_error("deriv_y_coeff");
}

} // namespace

// ---------------------------------------------------------------------------
// SectorExpr / SectorPoly
// ---------------------------------------------------------------------------

void SectorExpr::add(const Key& k, const RatFuncW& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SectorExpr SectorExpr::operator-() const {
    SectorExpr r;
    for (const auto& [k, f] : terms_) r.terms_.emplace(k, -f);
    return r;
}

SectorExpr& SectorExpr::operator+=(const SectorExpr& o) {
    for (const auto& [k, f] : o.terms_) add(k, f);
    return *this;
}

SectorExpr& SectorExpr::operator-=(const SectorExpr& o) {
    for (const auto& [k, f] : o.terms_) add(k, -f);
    return *this;
}

SectorExpr operator*(const Coefficient& c, SectorExpr s) {
    SectorExpr r;
    for (const auto& [k, f] : s.terms_) r.add(k, c * f);
    return r;
}

SectorExpr SectorExpr::mul_rpow(int k) const {
    SectorExpr r;
    for (const auto& [key, f] : terms_) {
        Key kk = key;
        kk.rpow += k;
        r.terms_.emplace(kk, f);
    }
    return r;
}

SectorExpr SectorExpr::component(int rpow, int covdeg) const {
    SectorExpr r;
    for (const auto& [key, f] : terms_)
        if (key.rpow == rpow && key.cov.degree() == covdeg) r.add(key, f);
    return r;
}

SectorExpr SectorExpr::deriv_y(Cov y) const {
    SectorExpr r;
    for (const auto& [key, f] : terms_) {
        RatFuncW df = f.map([&](const Coefficient& c) { return deriv_y_coeff(c, y); });
        r.add(key, (-kI) * df);
    }
    return r;
}

SectorExpr SectorExpr::euler() const {
    SectorExpr r;
    for (const auto& [key, f] : terms_) {
        long long deg = key.rpow + key.cov.degree();
        if (deg == 0) continue;
        r.add(key, Coefficient(-deg) * f);
    }
    return r;
}

std::string SectorExpr::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"tau", "Theta2", "Phi2"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (key.rpow > 0) os << "r^" << key.rpow << "*";
        os << f.str();
        for (int k = 0; k < 3; ++k) {
            if (key.cov.e[k] == 0) continue;
            os << "*" << names[k];
            if (key.cov.e[k] != 1) os << "^" << int(key.cov.e[k]);
        }
    }
    return os.str();
}

void SectorPoly::add(const Key& k, const PolyW& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SectorPoly SectorPoly::from_opsymbol(const OpSymbol& sym, int l) {
    OpSymbol restricted = sector_restrict(sym, l);
    SectorPoly r;
    for (const auto& [key, p] : restricted.terms()) r.add({key.rpow, key.cov}, p);
    return r;
}

SectorPoly SectorPoly::shift_w(const Rational& m) const {
    SectorPoly r;
    for (const auto& [key, p] : terms_) r.add(key, p.shift(m));
    return r;
}

SectorPoly SectorPoly::mul_rpow(int k) const {
    SectorPoly r;
    for (const auto& [key, p] : terms_) {
        Key kk = key;
        kk.rpow += k;
        r.add(kk, p);
    }
    return r;
}

SectorPoly SectorPoly::deriv_w() const {
    SectorPoly r;
    for (const auto& [key, p] : terms_) r.add(key, p.deriv());
    return r;
}

SectorPoly SectorPoly::deriv_cov(Cov v) const {
    // d/d eta on the degenerate covariables: lowers the monomial, raises the
    // explicit r-power by one.
    SectorPoly r;
    int k = static_cast<int>(v);
    for (const auto& [key, p] : terms_) {
        if (key.cov.e[k] == 0) continue;
        Key kk = key;
        kk.cov.e[k] = static_cast<int8_t>(kk.cov.e[k] - 1);
        kk.rpow += 1;
        r.add(kk, Coefficient(Rational(key.cov.e[k])) * p);
    }
    return r;
}

SectorPoly SectorPoly::deriv_y(Cov y) const {
    SectorPoly r;
    for (const auto& [key, p] : terms_)
        r.add(key, (-kI) * p.map([&](const Coefficient& c) { return deriv_y_coeff(c, y); }));
    return r;
}

int SectorPoly::max_w_degree() const {
    int d = 0;
    for (const auto& [key, p] : terms_) d = std::max(d, p.degree());
    return d;
}

int SectorPoly::max_cov_degree() const {
    int d = 0;
    for (const auto& [key, p] : terms_) d = std::max(d, key.cov.degree());
    return d;
}

SectorExpr leibniz(const SectorPoly& A, const SectorExpr& B) {
    SectorExpr out;
    // multi-indices alpha with |alpha| <= 2 paired as eta_k <-> y_k
    struct Alpha {
        std::array<int, 3> e;
        long long fact;
    };
    static const std::vector<Alpha> alphas = {
        {{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1},
        {{2, 0, 0}, 2}, {{0, 2, 0}, 2}, {{0, 0, 2}, 2},
        {{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}};
    for (const auto& alpha : alphas) {
        SectorPoly dA = A;
        SectorExpr dB = B;
        for (int v = 0; v < 3; ++v) {
            for (int rep = 0; rep < alpha.e[v]; ++rep) {
                dA = dA.deriv_cov(static_cast<Cov>(v));
                dB = dB.deriv_y(static_cast<Cov>(v));
            }
        }
        for (int k = 0; k <= 2; ++k) {
            if (k > 0) {
                dA = dA.deriv_w();
                dB = dB.euler();
            }
            Rational scale(1, alpha.fact * (k == 2 ? 2 : 1));
            for (const auto& [ka, pa] : dA.terms()) {
                for (const auto& [kb, fb] : dB.terms()) {
                    SectorExpr::Key key;
                    key.rpow = ka.rpow + kb.rpow;
                    for (int v = 0; v < 3; ++v)
                        key.cov.e[v] = static_cast<int8_t>(ka.cov.e[v] + kb.cov.e[v]);
                    out.add(key, Coefficient(scale) * (pa * fb));
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form parametrix symbols
// ---------------------------------------------------------------------------

namespace {

std::map<Rational, int> quad_factor_roots(int sigma, int l) {
    // h0 - sigma(2w - 5 - sigma) has sector roots sigma+3+l and sigma+2-l.
    std::map<Rational, int> m;
    m[Rational(sigma + 3 + l)] += 1;
    m[Rational(sigma + 2 - l)] += 1;
    return m;
}

CovPoly covpoly_pow(const CovPoly& base, int k) {
    CovPoly r{Coefficient(1)};
    for (int j = 0; j < k; ++j) r = r * base;
    return r;
}

} // namespace

std::vector<RatFuncW> b_seq(int n_max, int l) {
    if (n_max < 0) throw RangeError("b_seq: negative n_max");
    std::vector<RatFuncW> out;
    RatFuncW b(PolyW(Coefficient(1)), quad_factor_roots(0, l));
    out.push_back(b);
    for (int n = 1; n <= n_max; ++n) {
        b = b.divide_by_factors(quad_factor_roots(2 * n, l));
        out.push_back(b);
    }
    return out;
}

SectorExpr SectorSymbol::expr() const {
    SectorExpr e;
    for (const auto& [m, c] : cov.terms()) e.add({rpow, m}, c * core);
    return e;
}

SectorSymbol compute_d(int k, int n, int j, int l) {
    if (l < 0) throw RangeError("compute_d: negative sector");
    SectorSymbol s;
    s.level = k;
    s.flatness = n;
    s.eta_order = j;
    s.sector = l;
    s.rpow = n;
    auto zero = [&]() {
        s.core = RatFuncW();
        s.cov = CovPoly();
        return s;
    };
    if (k == 0) {
        if (n < 0 || n > 2 || j < 0 || j > 4 - n)
            throw RangeError("compute_d: level-0 index outside implemented range");
        if ((n + j) % 2 == 1) return zero();
        auto b = b_seq(2, l);
        if (n == 0) {
            // d^(0)_{0,2m} = C0^m b_m
            int m = j / 2;
            s.core = b[m];
            s.cov = covpoly_pow(build_C(CKind::C0), m);
        } else if (n == 1) {
            // d^(0)_{1,2m+1} = -sum_k C0^(m-k) P_{1,2k+1} b_{m+1}
            int m = (j - 1) / 2;
            s.core = b[m + 1];
            CovPoly acc;
            for (int kk = 0; kk <= m; ++kk)
                acc += covpoly_pow(build_C(CKind::C0), m - kk) * build_P1(kk);
            s.cov = -acc;
        } else {
            if (j == 0) {
                s.core = Coefficient(-2) * b[1];
                s.cov = CovPoly(Coefficient(1));
            } else {
                s.core = -b[1].divide_by_factors(quad_factor_roots(4, l));
                s.cov = build_P22();
            }
        }
        return s;
    }
    if (k == 1) {
        RatFuncW b0(PolyW(Coefficient(1)), quad_factor_roots(0, l));
        if (n == 0 && j == 0) {
            s.core = (Coefficient(2) * t_pow(1) * Coefficient::gen(Gen::Z1)) *
                     b0.divide_by_factors(quad_factor_roots(1, l));
            s.cov = CovPoly(Coefficient(1));
            return s;
        }
        if (n == 0 && j == 1) {
            s.core = kI * b0.divide_by_factors(quad_factor_roots(2, l));
            s.cov = build_C(CKind::C1);
            return s;
        }
        if (n == 1 && j == 0) {
            s.core = Coefficient(-10) * b0.divide_by_factors(quad_factor_roots(2, l));
            s.cov = CovPoly(Coefficient(1));
            return s;
        }
        throw RangeError("compute_d: level-1 index outside implemented range");
    }
    if (k == 2 && n == 0 && j == 0) {
        RatFuncW b0(PolyW(Coefficient(1)), quad_factor_roots(0, l));
        Coefficient twoTZ1 = Coefficient(2) * t_pow(1) * Coefficient::gen(Gen::Z1);
        RatFuncW first = (twoTZ1 * twoTZ1) *
                         b0.divide_by_factors(quad_factor_roots(1, l))
                             .divide_by_factors(quad_factor_roots(2, l));
        // -(1/3)(8(w-2) - l(l+1) - 6 t Z2) / ((h0 - 2(2w-7)) h0)
        PolyW num = Coefficient(8) * (PolyW::w() - PolyW(Coefficient(2)));
        num += PolyW(Coefficient(Rational(-static_cast<long long>(l) * (l + 1))));
        num -= PolyW(Coefficient(6) * t_pow(1) * Coefficient::gen(Gen::Z2));
        RatFuncW second =
            Coefficient(Rational(-1, 3)) *
            (num * b0.divide_by_factors(quad_factor_roots(2, l)));
        s.core = first + second;
        s.cov = CovPoly(Coefficient(1));
        return s;
    }
    throw RangeError("compute_d: index outside implemented range");
}

std::vector<SectorSymbol> mellin_symbol_expansion(int k, int order, int l) {
    if (order > 2) throw RangeError("mellin_symbol_expansion: order beyond truncation");
    std::vector<SectorSymbol> out;
    auto push = [&](int n, int j) {
        if (n > order) return;
        SectorSymbol s = compute_d(k, n, j, l);
        s.core = minus2t2() * s.core;
        out.push_back(std::move(s));
    };
    if (order < 0) return out;
    if (k == 0) {
        push(0, 0);
        push(0, 2);
        push(1, 1);
        push(2, 0);
        push(2, 2);
    } else if (k == 1) {
        push(0, 0);
        push(0, 1);
        push(1, 0);
    } else if (k == 2) {
        push(0, 0);
    } else {
        throw RangeError("mellin_symbol_expansion: level must be 0, 1 or 2");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Defining equations
// ---------------------------------------------------------------------------

namespace {

// The q-slot sums: Q_k = -2t^2 sum_n r^(k+n) d^(k)_{n,j}, with an optional
// mutation hook that zeroes one level-0 entry.
SectorExpr q_slot(int level, int l, int mut_n = -1, int mut_j = -1) {
    SectorExpr q;
    auto add = [&](int k, int n, int j) {
        if (k == 0 && n == mut_n && j == mut_j) return;
        SectorSymbol s = compute_d(k, n, j, l);
        s.core = minus2t2() * s.core;
        q += s.expr().mul_rpow(k);
    };
    if (level == 0) {
        for (int n = 0; n <= 2; ++n)
            for (int j = 0; j <= 4 - n; ++j) add(0, n, j);
    } else if (level == 1) {
        add(1, 0, 0);
        add(1, 0, 1);
        add(1, 1, 0);
    } else {
        add(2, 0, 0);
    }
    return q;
}

SectorPoly hamiltonian_slot(int level, int l) {
    // r^level T^{-2} a_level, sector-restricted, with symbolic Z1/Z2.
    SectorPoly p = SectorPoly::from_opsymbol(build_a(level, Edge::Generic), l);
    return p.shift_w(Rational(-2)).mul_rpow(level);
}

SectorExpr defining_equation(int K, int l, int mut_n, int mut_j) {
    SectorExpr acc;
    for (int k = 0; k <= K; ++k)
        acc += leibniz(hamiltonian_slot(k, l), q_slot(K - k, l, mut_n, mut_j));
    if (K == 0) {
        SectorExpr one;
        one.add({0, CovMono{}}, RatFuncW::one());
        acc -= one;
    }
    return acc;
}

SectorExpr verify_impl(int order, int l, int mut_n, int mut_j) {
    if (order < 0 || order > 2) throw RangeError("verify_defining_equations: order 0..2");
    SectorExpr residual;
    // level-0 equation: complete cells (n = order, j <= 4 - n)
    SectorExpr e0 = defining_equation(0, l, mut_n, mut_j);
    for (int j = 0; j <= 4 - order; ++j) residual += e0.component(order, j);
    if (order >= 1) {
        SectorExpr e1 = defining_equation(1, l, mut_n, mut_j);
        if (order == 1) {
            residual += e1.component(1, 0);
            residual += e1.component(1, 1);
        } else {
            residual += e1.component(2, 0);
        }
    }
    if (order == 2) {
        SectorExpr e2 = defining_equation(2, l, mut_n, mut_j);
        residual += e2.component(2, 0);
    }
    return residual;
}

} // namespace

SectorExpr verify_defining_equations(int order, int l) { return verify_impl(order, l, -1, -1); }

SectorExpr verify_defining_equations_mutated(int order, int l, int mut_n, int mut_j) {
    return verify_impl(order, l, mut_n, mut_j);
}

std::map<std::pair<int, int>, SectorExpr> solve_level0(int jmax, int l) {
    // Solve the level-0 defining equation cell by cell for the Q-normalised
    // unknowns, independently of the closed forms.
    std::map<std::pair<int, int>, SectorExpr> table;
    SectorPoly A0 = hamiltonian_slot(0, l);
    SectorExpr Q; // accumulated sum of solved cells
    for (int n = 0; n <= 2; ++n) {
        for (int j = 0; j <= jmax; ++j) {
            SectorExpr residual = leibniz(A0, Q).component(n, j);
            if (n == 0 && j == 0) {
                SectorExpr one;
                one.add({0, CovMono{}}, RatFuncW::one());
                residual -= one;
            }
            // coefficient of the unknown cell: -(1/2t^2)(h0 - (n+j)(2w-5-(n+j)))
            int sigma = n + j;
            SectorExpr cell;
            for (const auto& [key, f] : residual.terms()) {
                RatFuncW g = (minus2t2() * f).divide_by_factors(quad_factor_roots(sigma, l));
                cell.add(key, g);
            }
            cell = -cell;
            table[{n, j}] = cell;
            Q += cell;
        }
    }
    return table;
}

SectorExpr conormal(int k, int j, int l) {
    SectorExpr acc;
    if (j < k) return acc;
    for (int m = 0; m <= j - k; ++m) {
        int n = j - k - m;
        bool implemented = false;
        if (k == 0 && n <= 2 && m <= 4 - n) implemented = true;
        if (k == 1 && ((n == 0 && m <= 1) || (n == 1 && m == 0))) implemented = true;
        if (k == 2 && n == 0 && m == 0) implemented = true;
        if (!implemented) continue;
        SectorSymbol s = compute_d(k, n, m, l);
        s.core = minus2t2() * s.core;
        acc += s.expr();
    }
    return acc;
}

std::vector<PoleReport> pole_census(const std::vector<int>& levels, int l_max,
                                    const Rational& gamma) {
    if (gamma <= Rational(1, 2) || gamma >= Rational(3, 2))
        throw RangeError("pole_census: gamma must lie in (1/2, 3/2)");
    Rational contour = Rational(7, 2) - gamma;
    std::vector<PoleReport> out;
    for (int level : levels) {
        for (int l = 0; l <= l_max; ++l) {
            SectorSymbol s = compute_d(level, 0, 0, l);
            PoleReport rep;
            rep.symbol = "d^(" + std::to_string(level) + ")_{0,0}";
            rep.sector = l;
            rep.poles = pole_set(s.core);
            for (const auto& [root, mult] : rep.poles)
                rep.right_of_contour[root] = root > contour;
            out.push_back(std::move(rep));
        }
    }
    return out;
}

} // namespace edgegreen
