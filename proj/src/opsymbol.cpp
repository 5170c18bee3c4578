#include "edgegreen/opsymbol.hpp"

#include <sstream>

namespace edgegreen {

namespace {

const Coefficient kOne(1);
const Coefficient kI = Coefficient::imag_unit();
Coefficient t_pow(int k) { return Coefficient(Rational(1), mono_gen(Gen::T, k)); }
const Coefficient kCt = Coefficient::gen(Gen::CT);
const Coefficient kCs = Coefficient::gen(Gen::CS);

} // namespace

CovPoly::CovPoly(Coefficient c) {
    if (!c.is_zero()) terms_[CovMono{}] = std::move(c);
}

CovPoly CovPoly::cov(Cov v, int exp) {
    CovPoly p;
    CovMono m;
    m.e[static_cast<int>(v)] = static_cast<int8_t>(exp);
    p.terms_[m] = Coefficient(1);
    return p;
}

void CovPoly::add(const CovMono& m, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int CovPoly::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

CovPoly CovPoly::operator-() const {
    CovPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

CovPoly& CovPoly::operator+=(const CovPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

CovPoly& CovPoly::operator-=(const CovPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

CovPoly operator*(const CovPoly& a, const CovPoly& b) {
    CovPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            CovMono m;
            for (int k = 0; k < 3; ++k) m.e[k] = static_cast<int8_t>(ma.e[k] + mb.e[k]);
            r.add(m, ca * cb);
        }
    }
    return r;
}

CovPoly operator*(const Coefficient& c, CovPoly p) {
    CovPoly r;
    for (const auto& [m, pc] : p.terms_) r.add(m, c * pc);
    return r;
}

CovPoly CovPoly::deriv_cov(Cov v) const {
    CovPoly r;
    int k = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
        if (m.e[k] == 0) continue;
        CovMono mm = m;
        mm.e[k] = static_cast<int8_t>(mm.e[k] - 1);
        r.add(mm, Coefficient(Rational(m.e[k])) * c);
    }
    return r;
}

CovPoly CovPoly::part_of_degree(int deg) const {
    CovPoly r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == deg) r.add(m, c);
    return r;
}

std::string CovPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"tau", "Theta2", "Phi2"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int k = 0; k < 3; ++k) {
            if (m.e[k] == 0) continue;
            os << "*" << names[k];
            if (m.e[k] != 1) os << "^" << int(m.e[k]);
        }
    }
    return os.str();
}

CovPoly build_C(CKind kind) {
    CovPoly tau = CovPoly::cov(Cov::Tau);
    CovPoly th2 = CovPoly::cov(Cov::Theta2, 2);
    CovPoly ph2 = CovPoly::cov(Cov::Phi2, 2);
    switch (kind) {
    case CKind::C0:
        return t_pow(2) * (tau * tau) + th2 + kCs * ph2;
    case CKind::C1:
        return Coefficient(-5) * (t_pow(1) * tau) - kCt * CovPoly::cov(Cov::Theta2);
    case CKind::C2:
        return th2 + kCs * ph2;
    case CKind::C1Tilde:
        return build_C(CKind::C0) - Coefficient(4) * kI * t_pow(1) * tau +
               kI * build_C(CKind::C1);
    }
    throw std::logic_error("build_C: unknown kind");
}

CovPoly build_P1(int j) {
    if (j < 0) throw RangeError("build_P1: negative index");
    CovPoly tau = CovPoly::cov(Cov::Tau);
    CovPoly c0 = build_C(CKind::C0);
    CovPoly c0j(Coefficient(1));
    for (int k = 0; k < j; ++k) c0j = c0j * c0;
    CovPoly head = t_pow(1) * tau * c0j;
    if (j > 0) {
        CovPoly c0jm1(Coefficient(1));
        for (int k = 0; k < j - 1; ++k) c0jm1 = c0jm1 * c0;
        CovPoly cubic = t_pow(3) * tau * tau * tau -
                        (kCt * kCs) * (CovPoly::cov(Cov::Theta2) *
                                       CovPoly::cov(Cov::Phi2, 2));
        head += Coefficient(j) * cubic * c0jm1;
    }
    return Coefficient(4) * kI * head;
}

CovPoly build_P22() {
    CovPoly tau2 = CovPoly::cov(Cov::Tau, 2);
    CovPoly ph2 = CovPoly::cov(Cov::Phi2, 2);
    // 2(1 + 2 cos^2)/sin^4 = 2 cs^2 + 4 ct^2 cs
    Coefficient ang = Coefficient(2) * kCs * kCs + Coefficient(4) * kCt * kCt * kCs;
    return Coefficient(34) * t_pow(2) * tau2 + ang * ph2 +
           Coefficient(4) * build_C(CKind::C0);
}

Coefficient edge_Z1(Edge e) {
    switch (e) {
    case Edge::ElectronNucleus: return -Coefficient::gen(Gen::Z);
    case Edge::ElectronElectron: return Coefficient(Rational(1, 2)) * Coefficient::sqrt2();
    case Edge::Generic: return Coefficient::gen(Gen::Z1);
    }
    throw std::logic_error("edge_Z1");
}

Coefficient edge_Z2(Edge e) {
    Coefficient mtE = -(Coefficient::gen(Gen::T) * Coefficient::gen(Gen::E));
    switch (e) {
    case Edge::ElectronNucleus: return mtE + Coefficient(1) - Coefficient::gen(Gen::Z);
    case Edge::ElectronElectron:
        return mtE - Coefficient(2) * Coefficient::sqrt2() * Coefficient::gen(Gen::Z);
    case Edge::Generic: return Coefficient::gen(Gen::Z2);
    }
    throw std::logic_error("edge_Z2");
}

void OpSymbol::add(const Key& k, const PolyW& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OpSymbol OpSymbol::operator-() const {
    OpSymbol r;
    for (const auto& [k, p] : terms_) r.terms_.emplace(k, -p);
    return r;
}

OpSymbol& OpSymbol::operator+=(const OpSymbol& o) {
    for (const auto& [k, p] : o.terms_) add(k, p);
    return *this;
}

OpSymbol& OpSymbol::operator-=(const OpSymbol& o) {
    for (const auto& [k, p] : o.terms_) add(k, -p);
    return *this;
}

OpSymbol operator*(const Coefficient& c, OpSymbol s) {
    OpSymbol r;
    for (const auto& [k, p] : s.terms_) r.add(k, c * p);
    return r;
}

OpSymbol OpSymbol::mul_rpow(int k) const {
    OpSymbol r;
    for (const auto& [key, p] : terms_) {
        Key kk = key;
        kk.rpow += k;
        r.terms_.emplace(kk, p);
    }
    return r;
}

OpSymbol OpSymbol::truncate_rpow(int order) const {
    OpSymbol r;
    for (const auto& [key, p] : terms_)
        if (key.rpow <= order) r.terms_.emplace(key, p);
    return r;
}

int OpSymbol::max_eta_degree() const {
    int d = 0;
    for (const auto& [key, p] : terms_) d = std::max(d, key.cov.degree());
    return d;
}

std::string OpSymbol::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"tau", "Theta2", "Phi2"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, p] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (key.rpow > 0) os << "r^" << key.rpow << "*";
        os << "[" << p.str() << "]";
        if (key.lpow > 0) os << "*L";
        for (int k = 0; k < 3; ++k) {
            if (key.cov.e[k] == 0) continue;
            os << "*" << names[k];
            if (key.cov.e[k] != 1) os << "^" << int(key.cov.e[k]);
        }
    }
    return os.str();
}

namespace {

OpSymbol from_covpoly(const CovPoly& cp, const PolyW& wpart, int rpow = 0, int lpow = 0) {
    OpSymbol s;
    for (const auto& [m, c] : cp.terms()) {
        OpSymbol::Key key;
        key.rpow = rpow;
        key.lpow = lpow;
        key.cov = m;
        s.add(key, c * wpart);
    }
    return s;
}

} // namespace

OpSymbol build_h0() {
    // (w-2)^2 - (w-2) + L
    PolyW w2 = PolyW::linear(Rational(2));
    OpSymbol s;
    s.add({0, 0, CovMono{}}, w2 * w2 - w2);
    s.add({0, 1, CovMono{}}, PolyW(Coefficient(1)));
    return s;
}

OpSymbol build_a(int level, Edge edge) {
    Coefficient inv2t2 = Coefficient(Rational(1, 2), mono_gen(Gen::T, -2));
    Coefficient inv_t = t_pow(-1);
    switch (level) {
    case 0: {
        // -(1/2t^2)(w^2 - w + L) + (1/2t^2) C0   (C0 in the degenerate covariables)
        PolyW w = PolyW::w();
        OpSymbol s;
        s.add({0, 0, CovMono{}}, -inv2t2 * (w * w - w));
        s.add({0, 1, CovMono{}}, PolyW(-inv2t2));
        s += from_covpoly(build_C(CKind::C0), PolyW(inv2t2));
        return s;
    }
    case 1: {
        OpSymbol s = from_covpoly(build_C(CKind::C1), PolyW(kI * inv2t2));
        s.add({0, 0, CovMono{}}, PolyW(edge_Z1(edge) * inv_t));
        return s;
    }
    case 2: {
        OpSymbol s;
        Coefficient m43 = Coefficient(Rational(-4, 3), mono_gen(Gen::T, -2));
        s.add({0, 0, CovMono{}}, m43 * PolyW::w());
        s.add({0, 1, CovMono{}}, PolyW(Coefficient(Rational(-1, 6), mono_gen(Gen::T, -2))));
        s += from_covpoly(build_C(CKind::C2), PolyW(inv2t2));
        s.add({0, 0, CovMono{}}, PolyW(edge_Z2(edge) * inv_t));
        return s;
    }
    default:
        throw RangeError("build_a: level must be 0, 1 or 2");
    }
}

OpSymbol remainder_s(int k, int order, Edge edge) {
    if (k < 1 || k > 3) throw RangeError("remainder_s: k must be 1, 2 or 3");
    // r^k s_k = sum_{m >= k} r^m a_m truncated at `order`; the expansion of
    // the shifted Hamiltonian is available through a_2.
    OpSymbol acc;
    for (int m = k; m <= 2 && m <= order; ++m) acc += build_a(m, edge).mul_rpow(m - k);
    return acc;
}

OpSymbol sector_restrict(const OpSymbol& sym, int l) {
    if (l < 0) throw RangeError("sector_restrict: negative sector");
    Coefficient eig(Rational(-static_cast<long long>(l) * (l + 1)));
    OpSymbol r;
    for (const auto& [key, p] : sym.terms()) {
        OpSymbol::Key kk = key;
        kk.lpow = 0;
        PolyW q = p;
        for (int j = 0; j < key.lpow; ++j) q = eig * q;
        r.add(kk, q);
    }
    return r;
}

PolyW h0_sector(int l) {
    return PolyW::linear(Rational(3 + l)) * PolyW::linear(Rational(2 - l));
}

} // namespace edgegreen
