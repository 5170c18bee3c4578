#include "edgegreen/coefficient.hpp"
#include "edgegreen/ratfuncw.hpp"

#include <doctest.h>

#include <random>

using namespace edgegreen;

namespace {

Coefficient C(long long n) { return Coefficient(n); }
Coefficient Q(long long n, long long d) { return Coefficient(Rational(n, d)); }

RatFuncW from_roots(PolyW num, std::initializer_list<std::pair<long long, int>> roots) {
    std::map<Rational, int> den;
    for (auto [r, m] : roots) den[Rational(r)] += m;
    return RatFuncW(std::move(num), std::move(den));
}

} // namespace

TEST_CASE("rational basics") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK((a + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(-6, -4)) == Rational(3, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::parse("-35/4") == Rational(-35, 4));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("sqrt2 and i reduction relations") {
    Coefficient s = Coefficient::sqrt2();
    Coefficient i = Coefficient::imag_unit();
    CHECK(s * s == C(2));
    CHECK(i * i == C(-1));
    CHECK(i * i * i * i == C(1));
    // 1/(6 sqrt2) rationalizes to sqrt2/12
    Coefficient x = C(1).div_monomial(C(6) * s);
    CHECK(x == Q(1, 12) * s);
    CHECK(x.eval({}) == doctest::Approx(0.1178511301977579).epsilon(1e-12));
}

TEST_CASE("coefficient arithmetic properties on random inputs") {
    std::mt19937 rng(42);
    auto rand_coeff = [&]() {
        Coefficient acc;
        std::uniform_int_distribution<int> nterm(1, 4), val(-5, 5), expo(0, 2);
        int n = nterm(rng);
        for (int k = 0; k < n; ++k) {
            Monomial m = mono_one();
            m[static_cast<int>(Gen::T)] = static_cast<int16_t>(val(rng) % 3);
            m[static_cast<int>(Gen::Z)] = static_cast<int16_t>(expo(rng));
            m[static_cast<int>(Gen::S)] = static_cast<int16_t>(expo(rng));
            m[static_cast<int>(Gen::I)] = static_cast<int16_t>(expo(rng));
            int v = val(rng);
            if (v != 0) acc += Coefficient(Rational(v), m);
        }
        return acc;
    };
    for (int iter = 0; iter < 200; ++iter) {
        Coefficient a = rand_coeff(), b = rand_coeff(), c = rand_coeff();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(normalize(a) == a);
    }
}

TEST_CASE("coefficient string round-trip") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-9, 9), expo(0, 3);
    for (int iter = 0; iter < 100; ++iter) {
        Coefficient acc;
        for (int k = 0; k < 3; ++k) {
            Monomial m = mono_one();
            m[static_cast<int>(Gen::T)] = static_cast<int16_t>(val(rng) % 4);
            m[static_cast<int>(Gen::Z1)] = static_cast<int16_t>(expo(rng));
            m[static_cast<int>(Gen::CT)] = static_cast<int16_t>(expo(rng));
            m[static_cast<int>(Gen::S)] = static_cast<int16_t>(expo(rng) % 2);
            int v = val(rng);
            if (v != 0) acc += Coefficient(Rational(v, 1 + expo(rng)), m);
        }
        CHECK(Coefficient::parse(acc.str()) == acc);
    }
    CHECK(Coefficient::parse("-1/3") == Q(-1, 3));
    CHECK(Coefficient::parse("2*t*Z1") ==
          C(2) * Coefficient::gen(Gen::T) * Coefficient::gen(Gen::Z1));
    CHECK(Coefficient::parse("1/12*s") == Q(1, 12) * Coefficient::sqrt2());
}

TEST_CASE("theta2 derivative chain rule") {
    Coefficient ct = Coefficient::gen(Gen::CT);
    Coefficient cs = Coefficient::gen(Gen::CS);
    CHECK(ct.deriv_theta2() == -cs);
    CHECK(cs.deriv_theta2() == C(-2) * cs * ct);
    // d/dtheta (ct^2) = -2 ct cs
    CHECK((ct * ct).deriv_theta2() == C(-2) * ct * cs);
}

TEST_CASE("shift moves poles and preserves residues") {
    // T^2 of 1/((w-3)(w-2)) -> 1/((w-1) w)
    RatFuncW f = from_roots(PolyW(C(1)), {{3, 1}, {2, 1}});
    RatFuncW g = shift(f, Rational(2));
    std::map<Rational, int> want{{Rational(1), 1}, {Rational(0), 1}};
    CHECK(pole_set(g) == want);
    CHECK(residue_at(g, Rational(1)) == residue_at(f, Rational(3)));
    CHECK(residue_at(g, Rational(0)) == residue_at(f, Rational(2)));
    CHECK(shift(shift(f, Rational(5)), Rational(-5)) == f);
    CHECK(shift(f, Rational(0)) == f);
}

TEST_CASE("shift of a polynomial: T^-2 (w^2 - w) = (w-2)^2 - (w-2)") {
    PolyW p({C(0), C(-1), C(1)}); // w^2 - w
    PolyW q = p.shift(Rational(-2));
    PolyW want = PolyW::linear(Rational(2)) * PolyW::linear(Rational(2)) -
                 PolyW::linear(Rational(2));
    CHECK(q == want);
}

TEST_CASE("residues") {
    // f = 1/((w-4)(w-1)) at w0=1 -> -1/3
    RatFuncW f = from_roots(PolyW(C(1)), {{4, 1}, {1, 1}});
    CHECK(residue_at(f, Rational(1)) == Q(-1, 3));
    CHECK(residue_at(from_roots(PolyW(C(1)), {{0, 1}}), Rational(0)) == C(1));
    CHECK(residue_at(f, Rational(10)) == Coefficient());
    // residue at a double pole raises
    RatFuncW g = from_roots(PolyW(C(1)), {{3, 2}, {1, 1}});
    CHECK_THROWS_AS(residue_at(g, Rational(3)), MultiplePoleError);
}

TEST_CASE("residue of 1/((w+l)(w-l-1)) at -l equals -1/(2l+1)") {
    for (long long l = 0; l <= 5; ++l) {
        RatFuncW f = from_roots(PolyW(C(1)), {{-l, 1}, {l + 1, 1}});
        CHECK(residue_at(f, Rational(-l)) == Q(-1, 2 * l + 1));
    }
}

TEST_CASE("pole_set reduces against the numerator") {
    RatFuncW f = from_roots(PolyW::linear(Rational(3)), {{3, 2}, {1, 1}});
    std::map<Rational, int> want{{Rational(3), 1}, {Rational(1), 1}};
    CHECK(pole_set(f) == want);
    // 1/((w-3)(w-2)) -> {3:1, 2:1}
    RatFuncW g = from_roots(PolyW(C(1)), {{3, 1}, {2, 1}});
    std::map<Rational, int> want2{{Rational(3), 1}, {Rational(2), 1}};
    CHECK(pole_set(g) == want2);
}

TEST_CASE("partial fractions") {
    // 1/((w-1)w) = 1/(w-1) - 1/w
    RatFuncW f = from_roots(PolyW(C(1)), {{1, 1}, {0, 1}});
    auto terms = partial_fractions(f);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].root == Rational(0));
    CHECK(terms[0].coeff == C(-1));
    CHECK(terms[1].root == Rational(1));
    CHECK(terms[1].coeff == C(1));

    // multiplicity-2 case recombines exactly
    RatFuncW g = from_roots(PolyW(C(1)), {{3, 2}, {2, 1}, {4, 1}});
    auto gt = partial_fractions(g);
    bool saw_double = false;
    RatFuncW recombined;
    for (const auto& term : gt) {
        if (term.multiplicity == 2) saw_double = true;
        std::map<Rational, int> den{{term.root, term.multiplicity}};
        recombined += RatFuncW(PolyW(term.coeff), den);
    }
    CHECK(saw_double);
    CHECK(recombined == g);
    CHECK_THROWS_AS(partial_fractions(from_roots(PolyW({C(1), C(0), C(1)}), {{1, 1}, {2, 1}})),
                    DegreeError);
}

TEST_CASE("residue sum theorem and recombination on random rationals") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> root(-6, 6), nroots(2, 5), cval(-4, 4);
    for (int iter = 0; iter < 100; ++iter) {
        std::map<Rational, int> den;
        int n = nroots(rng);
        for (int k = 0; k < n; ++k) den[Rational(root(rng))] += 1;
        int dd = 0;
        for (auto& [r, m] : den) dd += m;
        // numerator degree <= denominator degree - 2 so residues sum to zero
        std::vector<Coefficient> nc;
        for (int k = 0; k <= dd - 2; ++k) nc.push_back(C(cval(rng)));
        PolyW num(nc);
        if (num.is_zero()) num = PolyW(C(1));
        RatFuncW f(num, den);
        if (f.is_zero()) continue;
        Coefficient sum;
        bool simple = true;
        for (const auto& [r, m] : pole_set(f)) {
            if (m > 1) {
                simple = false;
                break;
            }
            sum += residue_at(f, r);
        }
        if (simple && f.numerator().degree() <= f.denominator_degree() - 2)
            CHECK(sum == Coefficient());
        // partial fraction recombination is exact
        RatFuncW rec;
        for (const auto& term : partial_fractions(f)) {
            std::map<Rational, int> d{{term.root, term.multiplicity}};
            rec += RatFuncW(PolyW(term.coeff), d);
        }
        CHECK(rec == f);
        // shifting back and forth is the identity
        CHECK(shift(shift(f, Rational(3)), Rational(-3)) == f);
        for (const auto& [r, m] : pole_set(f))
            if (m == 1)
                CHECK(residue_at(shift(f, Rational(3)), r - Rational(3)) == residue_at(f, r));
    }
}
