#include "edgegreen/parametrix.hpp"

#include <doctest.h>

using namespace edgegreen;

namespace {

Coefficient C(long long n) { return Coefficient(n); }
Coefficient m2t2() { return C(-2) * Coefficient(Rational(1), mono_gen(Gen::T, 2)); }

RatFuncW simple(std::initializer_list<long long> roots, Coefficient num = Coefficient(1)) {
    std::map<Rational, int> den;
    for (long long r : roots) den[Rational(r)] += 1;
    return RatFuncW(PolyW(std::move(num)), std::move(den));
}

} // namespace

TEST_CASE("b sequence") {
    auto b = b_seq(2, 0);
    CHECK(b[0] == simple({3, 2}));
    CHECK(b[1] == simple({3, 2, 4, 5}));
    CHECK(b_seq(0, 0)[0] == b[0]);
    // poles of b_n are {3+l, 2-l} plus {2m+3+l, 2m+2-l}, all simple
    for (int l = 0; l <= 5; ++l) {
        auto bl = b_seq(3, l);
        for (int n = 0; n <= 3; ++n) {
            std::map<Rational, int> want{{Rational(3 + l), 1}, {Rational(2 - l), 1}};
            for (int m = 1; m <= n; ++m) {
                want[Rational(2 * m + 3 + l)] = 1;
                want[Rational(2 * m + 2 - l)] = 1;
            }
            CHECK(pole_set(bl[n]) == want);
        }
    }
}

TEST_CASE("closed-form d symbols") {
    // d^(0)_{2,0} = -2 b_1
    SectorSymbol d20 = compute_d(0, 2, 0, 0);
    CHECK(d20.core == C(-2) * simple({3, 2, 4, 5}));
    CHECK(d20.cov == CovPoly(C(1)));
    CHECK(d20.rpow == 2);
    // d^(1)_{1,0} = -10/(h0 (h0 - 2(2w-7)))
    SectorSymbol d110 = compute_d(1, 1, 0, 0);
    CHECK(d110.core == C(-10) * simple({3, 2, 4, 5}));
    // d^(0)_{0,1} = 0 and all parity zeros for l <= 5
    CHECK(compute_d(0, 0, 1, 0).is_zero());
    for (int l = 0; l <= 5; ++l)
        for (int n = 0; n <= 2; ++n)
            for (int j = 0; j <= 4 - n; ++j)
                if ((n + j) % 2 == 1) CHECK(compute_d(0, n, j, l).is_zero());
    // d^(1)_{0,0} denominator at l=0: multiplicity 2 at w=3
    SectorSymbol d100 = compute_d(1, 0, 0, 0);
    std::map<Rational, int> want{{Rational(3), 2}, {Rational(2), 1}, {Rational(4), 1}};
    CHECK(pole_set(d100.core) == want);
    CHECK_THROWS_AS(compute_d(1, 1, 1, 0), RangeError);
    CHECK_THROWS_AS(compute_d(0, 3, 0, 0), RangeError);
}

TEST_CASE("d^(2)_{0,0} matches the printed closed form") {
    for (int l = 0; l <= 5; ++l) {
        Coefficient tZ1 = Coefficient::gen(Gen::T) * Coefficient::gen(Gen::Z1);
        Coefficient tZ2 = Coefficient::gen(Gen::T) * Coefficient::gen(Gen::Z2);
        std::map<Rational, int> den1;
        for (long long r : {3 + l, 2 - l, 4 + l, 3 - l, 5 + l, 4 - l}) den1[Rational(r)] += 1;
        RatFuncW first(PolyW(C(4) * tZ1 * tZ1), den1);
        std::map<Rational, int> den2;
        for (long long r : {3 + l, 2 - l, 5 + l, 4 - l}) den2[Rational(r)] += 1;
        PolyW num = C(8) * PolyW::w() - PolyW(C(16 + l * (l + 1)) + C(6) * tZ2);
        RatFuncW second = Coefficient(Rational(-1, 3)) * RatFuncW(num, den2);
        CHECK(compute_d(2, 0, 0, l).core == first + second);
    }
}

TEST_CASE("mellin symbol expansion lists") {
    auto k0 = mellin_symbol_expansion(0, 2, 0);
    REQUIRE(k0.size() == 5);
    CHECK(k0[0].core == m2t2() * simple({3, 2}));
    CHECK(k0[1].eta_order == 2);
    CHECK(k0[2].flatness == 1);
    CHECK(k0[3].core == (m2t2() * C(-2)) * simple({3, 2, 4, 5}));
    auto k2 = mellin_symbol_expansion(2, 0, 0);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].core == m2t2() * compute_d(2, 0, 0, 0).core);
    CHECK(mellin_symbol_expansion(1, -1, 0).empty());
}

TEST_CASE("defining equations hold for orders 0..2 and sectors 0..5") {
    for (int order = 0; order <= 2; ++order)
        for (int l = 0; l <= 5; ++l) CHECK(verify_defining_equations(order, l).is_zero());
}

TEST_CASE("mutated recursion fails") {
    // zeroing d^(0)_{1,1} leaves a residual proportional to P_{1,1} b_1
    SectorExpr r = verify_defining_equations_mutated(1, 0, 1, 1);
    CHECK(!r.is_zero());
    CHECK(!r.component(1, 1).is_zero());
    // truncating the (r eta)^2 terms of q_{0,0} leaves an eta-degree-2 residual
    SectorExpr r2 = verify_defining_equations_mutated(0, 0, 0, 2);
    CHECK(!r2.is_zero());
    CHECK(!r2.component(0, 2).is_zero());
    CHECK(r2.component(0, 0).is_zero());
    CHECK(r2.component(0, 1).is_zero());
}

TEST_CASE("generic level-0 solver reproduces the closed forms") {
    for (int l = 0; l <= 5; ++l) {
        auto table = solve_level0(4, l);
        for (int n = 0; n <= 2; ++n) {
            for (int j = 0; j <= 4 - n; ++j) {
                SectorSymbol d = compute_d(0, n, j, l);
                d.core = m2t2() * d.core;
                CHECK(table[{n, j}] == d.expr());
            }
        }
    }
}

TEST_CASE("conormal symbols") {
    CHECK(conormal(1, 0, 0).is_zero());
    SectorSymbol d00 = compute_d(0, 0, 0, 0);
    d00.core = m2t2() * d00.core;
    CHECK(conormal(0, 0, 0) == d00.expr());
    // Prop-3 consistency: the eta-degree-m part of conormal(k,j) is
    // -2t^2 d^(k)_{j-k-m,m}
    for (int l = 0; l <= 5; ++l) {
        for (int j = 0; j <= 2; ++j) {
            SectorExpr cn = conormal(0, j, l);
            for (int m = 0; m <= j; ++m) {
                SectorSymbol d = compute_d(0, j - m, m, l);
                d.core = m2t2() * d.core;
                SectorExpr part;
                for (const auto& [key, f] : cn.terms())
                    if (key.cov.degree() == m) part.add(key, f);
                CHECK(part == d.expr());
            }
        }
        SectorExpr c1 = conormal(1, 1, l);
        SectorSymbol d1 = compute_d(1, 0, 0, l);
        d1.core = m2t2() * d1.core;
        CHECK(c1 == d1.expr());
    }
}

TEST_CASE("pole census") {
    for (const Rational& gamma : {Rational(3, 5), Rational(1), Rational(7, 5)}) {
        auto reports = pole_census({0, 1, 2}, 5, gamma);
        for (const auto& rep : reports) {
            for (const auto& [root, mult] : rep.poles) {
                // integer poles bounded by 5 + l
                CHECK(root.is_integer());
                CHECK(root <= Rational(5 + rep.sector));
                if (mult > 1) {
                    CHECK(rep.sector == 0);
                    CHECK((root == Rational(3) || root == Rational(4)));
                    CHECK(rep.right_of_contour.at(root));
                }
            }
        }
        // level 1, l=0: multiple pole at 3, simple at 2 and 4
        auto r10 = pole_census({1}, 0, gamma);
        std::map<Rational, int> want{{Rational(3), 2}, {Rational(2), 1}, {Rational(4), 1}};
        CHECK(r10[0].poles == want);
        // level 2, l=0: multiple poles at 3 and 4
        auto r20 = pole_census({2}, 0, gamma);
        CHECK(r20[0].poles.at(Rational(3)) == 2);
        CHECK(r20[0].poles.at(Rational(4)) == 2);
        // level 1, l >= 1: all poles simple
        auto r1 = pole_census({1}, 5, gamma);
        for (const auto& rep : r1)
            if (rep.sector >= 1)
                for (const auto& [root, mult] : rep.poles) CHECK(mult == 1);
    }
    CHECK_THROWS_AS(pole_census({0}, 1, Rational(2)), RangeError);
}

TEST_CASE("green-assembly symbol poles stay within 5 + l") {
    for (int l = 0; l <= 5; ++l) {
        std::vector<SectorSymbol> syms = {compute_d(0, 0, 0, l), compute_d(0, 0, 2, l),
                                          compute_d(0, 1, 1, l), compute_d(0, 2, 0, l),
                                          compute_d(1, 0, 0, l), compute_d(1, 0, 1, l),
                                          compute_d(1, 1, 0, l), compute_d(2, 0, 0, l)};
        for (const auto& s : syms)
            for (const auto& [root, mult] : pole_set(s.core)) {
                CHECK(root.is_integer());
                CHECK(root <= Rational(5 + l));
                if (mult > 1) CHECK(root >= Rational(3));
            }
    }
}
