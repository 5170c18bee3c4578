#pragma once

#include "edgegreen/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace edgegreen {

/// Generators of the scalar ring used throughout the symbol calculus.
///
/// t carries a signed exponent (1/t is t^-1); s stands for sqrt(2) and i for
/// the imaginary unit, reduced via s^2 -> 2 and i^2 -> -1.  ct = cot(theta2)
/// and cs = 1/sin^2(theta2) are the edge-angle coefficients; differentiation
/// in theta2 acts by ct' = -cs, cs' = -2*ct*cs.  Z1/Z2 are the formal
/// potential constants of the two edge types, substituted late.  Za/Zb/K/tR
/// only appear in the two-center expansion (K is the inverse square-root
/// distance factor, tR = t/R).
enum class Gen : int {
    T = 0,
    Z,
    E,
    A,
    S,
    I,
    CT,
    CS,
    Z1,
    Z2,
    ZA,
    ZB,
    K,
    TR,
    COUNT
};

constexpr int kNumGens = static_cast<int>(Gen::COUNT);

using Monomial = std::array<int16_t, kNumGens>;

Monomial mono_one();
Monomial mono_gen(Gen g, int exp = 1);

/// Sparse multivariate polynomial over Rational in the generators above.
/// Always normalized: s- and i-exponents reduced to {0,1}, no zero terms.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(long long n);
    Coefficient(const Rational& r);
    Coefficient(const Rational& r, const Monomial& m);

    static Coefficient gen(Gen g, int exp = 1);
    /// sqrt(2) as a ring element.
    static Coefficient sqrt2() { return gen(Gen::S); }
    static Coefficient imag_unit() { return gen(Gen::I); }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// The value as a Rational; throws if any generator is present.
    Rational rational_value() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);

    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }

    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }
    friend bool operator<(const Coefficient& a, const Coefficient& b) {
        return a.terms_ < b.terms_;
    }

    /// Division by an invertible monomial: rationals, powers of t, s, i.
    /// s^-1 = s/2, i^-1 = -i.  Throws std::domain_error otherwise.
    Coefficient div_monomial(const Coefficient& m) const;

    /// Substitute generators by ring elements (simultaneously).
    Coefficient substitute(const std::map<Gen, Coefficient>& repl) const;

    /// Partial derivative with respect to t or theta2 (chain rule on ct/cs).
    Coefficient deriv_t() const;
    Coefficient deriv_theta2() const;

    bool depends_on(Gen g) const;

    /// Numeric evaluation; every generator present must be assigned.
    double eval(const std::map<Gen, double>& vals) const;

    std::string str() const;
    static Coefficient parse(const std::string& s);

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

/// normalize is the identity on this representation (construction already
/// canonicalizes); kept as the named operation for round-trip checks.
inline const Coefficient& normalize(const Coefficient& c) { return c; }

} // namespace edgegreen
