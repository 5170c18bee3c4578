#include "edgegreen/opsymbol.hpp"
#include "edgegreen/series_engine.hpp"

#include <doctest.h>

using namespace edgegreen;

namespace {

Coefficient C(long long n) { return Coefficient(n); }
Coefficient Q(long long n, long long d) { return Coefficient(Rational(n, d)); }
Coefficient tp(int k) { return Coefficient(Rational(1), mono_gen(Gen::T, k)); }

// Independent oracle: the order-2 truncation of the Mellin symbol of
// r^2 (H_edge - E), assembled directly from the edge-degenerate operator and
// the Taylor rows of the series engine.  Quantization: (-r d_r) -> w,
// (r d_t) -> i (r tau), (r d_theta2) -> i (r Theta2), (r d_phi2) -> i (r Phi2),
// Laplace-Beltrami on the cone base -> L.
OpSymbol hamiltonian_symbol_oracle(Edge edge) {
    const Coefficient i = Coefficient::imag_unit();
    const Coefficient half(Rational(1, 2));
    const Coefficient inv2t2 = half * tp(-2);
    OpSymbol s;

    // -(1/2t^2) w^2
    s.add({0, 0, CovMono{}}, -inv2t2 * (PolyW::w() * PolyW::w()));
    // -(h(r)/2t^2) w
    RSeries h = expand_h(2);
    for (int n = 0; n <= 2; ++n)
        s.add({n, 0, CovMono{}}, (-h.coeff(n) * inv2t2) * PolyW::w());
    // -(1/2)(i r tau)^2
    OpSymbol tau2;
    tau2.add({0, 0, CovMono{{2, 0, 0}}}, PolyW(-half * i * i));
    s += tau2;
    // -(5 r / 2t)(i r tau)
    s.add({1, 0, CovMono{{1, 0, 0}}}, PolyW(Q(-5, 2) * tp(-1) * i));
    // -(sec^2 r / 2t^2)(i r Theta2)^2  and  -(cs sec^2 r / 2t^2)(i r Phi2)^2
    RSeries sec2 = series_sec2(2);
    for (int n = 0; n <= 2; n += 2) {
        s.add({n, 0, CovMono{{0, 2, 0}}}, PolyW(sec2.coeff(n) * inv2t2));
        s.add({n, 0, CovMono{{0, 0, 2}}},
              PolyW(sec2.coeff(n) * inv2t2 * Coefficient::gen(Gen::CS)));
    }
    // -(r ct sec^2 r / 2t^2)(i r Theta2)
    s.add({1, 0, CovMono{{0, 1, 0}}},
          PolyW(-Coefficient::gen(Gen::CT) * inv2t2 * i));
    // -(r^2/sin^2 r)(1/2t^2) L
    RSeries s2 = series_r2_over_sin2(2);
    for (int n = 0; n <= 2; n += 2) s.add({n, 1, CovMono{}}, PolyW(-s2.coeff(n) * inv2t2));
    // (r/t) v(r)
    RSeries v = expand_potential(edge == Edge::ElectronNucleus
                                     ? PotentialEdge::ElectronNucleus
                                     : PotentialEdge::ElectronElectron,
                                 1);
    for (int n = 0; n <= 1; ++n) s.add({n + 1, 0, CovMono{}}, PolyW(v.coeff(n) * tp(-1)));
    // -r^2 E
    s.add({2, 0, CovMono{}}, PolyW(-Coefficient::gen(Gen::E)));
    return s.truncate_rpow(2);
}

} // namespace

TEST_CASE("covariable polynomials") {
    CovPoly c0 = build_C(CKind::C0);
    CovPoly want = tp(2) * CovPoly::cov(Cov::Tau, 2) + CovPoly::cov(Cov::Theta2, 2) +
                   Coefficient::gen(Gen::CS) * CovPoly::cov(Cov::Phi2, 2);
    CHECK(c0 == want);
    // C2 = C0 - t^2 tau^2 (no tau^2 term)
    CHECK(build_C(CKind::C2) == c0 - tp(2) * CovPoly::cov(Cov::Tau, 2));
    // C1~ has no covariable-free term
    CHECK(build_C(CKind::C1Tilde).part_of_degree(0).is_zero());
    // C1~ = C0 - 4 i t tau + i C1 holds by construction
    const Coefficient i = Coefficient::imag_unit();
    CHECK(build_C(CKind::C1Tilde) ==
          c0 - C(4) * i * tp(1) * CovPoly::cov(Cov::Tau) + i * build_C(CKind::C1));
}

TEST_CASE("Z1 and Z2 per edge") {
    CHECK(edge_Z1(Edge::ElectronElectron) == Q(1, 2) * Coefficient::sqrt2());
    CHECK(edge_Z1(Edge::ElectronNucleus) == -Coefficient::gen(Gen::Z));
    Coefficient mtE = -(Coefficient::gen(Gen::T) * Coefficient::gen(Gen::E));
    CHECK(edge_Z2(Edge::ElectronNucleus) == mtE + C(1) - Coefficient::gen(Gen::Z));
    CHECK(edge_Z2(Edge::ElectronElectron) ==
          mtE - C(2) * Coefficient::sqrt2() * Coefficient::gen(Gen::Z));
}

TEST_CASE("a0 pieces") {
    OpSymbol a0 = build_a(0, Edge::Generic);
    // covariables off, L off: -(1/2t^2)(w^2 - w), the shifted form T^2 h0
    PolyW w = PolyW::w();
    auto it = a0.terms().find({0, 0, CovMono{}});
    REQUIRE(it != a0.terms().end());
    CHECK(it->second == (Q(-1, 2) * tp(-2)) * (w * w - w));
    // the eta-degree-2 part is exactly (1/2t^2) C0 in the degenerate covariables
    OpSymbol c0part;
    CovPoly c0 = build_C(CKind::C0);
    for (const auto& [m, c] : c0.terms()) c0part.add({0, 0, m}, PolyW(Q(1, 2) * tp(-2) * c));
    OpSymbol deg2;
    for (const auto& [key, p] : a0.terms())
        if (key.cov.degree() == 2) deg2.add(key, p);
    CHECK(deg2 == c0part);
}

TEST_CASE("a1 Z1 term per edge") {
    OpSymbol ee = build_a(1, Edge::ElectronElectron);
    auto it = ee.terms().find({0, 0, CovMono{}});
    REQUIRE(it != ee.terms().end());
    CHECK(it->second == PolyW(Q(1, 2) * Coefficient::sqrt2() * tp(-1)));
    OpSymbol en = build_a(1, Edge::ElectronNucleus);
    it = en.terms().find({0, 0, CovMono{}});
    REQUIRE(it != en.terms().end());
    CHECK(it->second == PolyW(-Coefficient::gen(Gen::Z) * tp(-1)));
}

TEST_CASE("eta degree cap") {
    for (int level = 0; level <= 2; ++level)
        CHECK(build_a(level, Edge::Generic).max_eta_degree() <= 2);
    CHECK(build_P1(1).max_degree() == 3);
    CHECK(build_P22().max_degree() == 2);
}

TEST_CASE("hamiltonian assembly cross-check") {
    for (Edge edge : {Edge::ElectronNucleus, Edge::ElectronElectron}) {
        OpSymbol built = build_a(0, edge) + build_a(1, edge).mul_rpow(1) +
                         build_a(2, edge).mul_rpow(2);
        CHECK(built == hamiltonian_symbol_oracle(edge));
    }
}

TEST_CASE("remainders") {
    Edge e = Edge::Generic;
    OpSymbol a1 = build_a(1, e), a2 = build_a(2, e);
    // s2 leading term is a2
    CHECK(remainder_s(2, 2, e) == a2);
    // s1 at r = 0 is a1 (the r s1 expansion starts with r a1)
    OpSymbol s1 = remainder_s(1, 2, e);
    OpSymbol s1_at0;
    for (const auto& [key, p] : s1.terms())
        if (key.rpow == 0) s1_at0.add(key, p);
    CHECK(s1_at0 == a1);
    CHECK(s1 == a1 + a2.mul_rpow(1));
    // order below k gives the zero symbol
    CHECK(remainder_s(3, 2, e).is_zero());
    CHECK(remainder_s(1, 0, e).is_zero());
}

TEST_CASE("sector restriction") {
    OpSymbol h0 = build_h0();
    for (int l = 0; l <= 5; ++l) {
        OpSymbol hl = sector_restrict(h0, l);
        auto it = hl.terms().find({0, 0, CovMono{}});
        REQUIRE(it != hl.terms().end());
        CHECK(it->second == h0_sector(l));
    }
    // h0 at l=0 -> (w-3)(w-2); at l=2 -> (w-5) w
    CHECK(h0_sector(0) == PolyW::linear(Rational(3)) * PolyW::linear(Rational(2)));
    CHECK(h0_sector(2) == PolyW::linear(Rational(5)) * PolyW::linear(Rational(0)));
    // L-free symbols are unchanged
    OpSymbol a1 = build_a(1, Edge::Generic);
    CHECK(sector_restrict(a1, 3) == a1);
    // commutes with addition
    OpSymbol a0 = build_a(0, Edge::Generic);
    CHECK(sector_restrict(a0 + h0, 2) == sector_restrict(a0, 2) + sector_restrict(h0, 2));
    // h0 sector roots {3+l, 2-l} are distinct for every l >= 0
    for (int l = 0; l <= 12; ++l) CHECK(Rational(3 + l) != Rational(2 - l));
}
