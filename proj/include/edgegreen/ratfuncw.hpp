#pragma once

#include "edgegreen/polyw.hpp"

#include <map>

namespace edgegreen {

struct MultiplePoleError : std::runtime_error {
    explicit MultiplePoleError(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeError : std::runtime_error {
    explicit DegreeError(const std::string& what) : std::runtime_error(what) {}
};

/// Rational function of w whose denominator is a product of monic linear
/// factors (w - c) with exact rational roots, stored as root -> multiplicity.
/// Always reduced: no denominator root divides the numerator.
class RatFuncW {
public:
    RatFuncW() = default;
    RatFuncW(PolyW numerator);
    RatFuncW(PolyW numerator, std::map<Rational, int> denominator);

    static RatFuncW one() { return RatFuncW(PolyW(Coefficient(1))); }

    bool is_zero() const { return num_.is_zero(); }
    const PolyW& numerator() const { return num_; }
    const std::map<Rational, int>& denominator() const { return den_; }
    int denominator_degree() const;

    RatFuncW operator-() const;
    RatFuncW& operator+=(const RatFuncW& o);
    RatFuncW& operator-=(const RatFuncW& o);
    friend RatFuncW operator+(RatFuncW a, const RatFuncW& b) { return a += b; }
    friend RatFuncW operator-(RatFuncW a, const RatFuncW& b) { return a -= b; }
    friend RatFuncW operator*(const RatFuncW& a, const RatFuncW& b);
    friend RatFuncW operator*(const Coefficient& c, RatFuncW f);
    friend RatFuncW operator*(const PolyW& p, const RatFuncW& f);

    /// Division by a product of monic linear factors.
    RatFuncW divide_by_factors(const std::map<Rational, int>& factors) const;

    friend bool operator==(const RatFuncW& a, const RatFuncW& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncW& a, const RatFuncW& b) { return !(a == b); }

    /// Apply a scalar ring map to every numerator coefficient.
    template <typename F>
    RatFuncW map(F&& f) const {
        return RatFuncW(num_.map(f), den_);
    }

    std::string str(const std::string& var = "w") const;

private:
    void reduce();
    PolyW num_;
    std::map<Rational, int> den_;
};

/// (T^m f)(w) = f(w + m); poles move from c to c - m, residues are kept.
RatFuncW shift(const RatFuncW& f, const Rational& m);

/// Exact pole multiset after reduction against the numerator.
std::map<Rational, int> pole_set(const RatFuncW& f);

/// Residue at a simple pole (0 if w0 is not a pole); throws
/// MultiplePoleError when the multiplicity at w0 exceeds 1.
Coefficient residue_at(const RatFuncW& f, const Rational& w0);

struct PartialFractionTerm {
    Rational root;
    int multiplicity = 1; // the term is coeff / (w - root)^multiplicity
    Coefficient coeff;
};

/// Full partial-fraction decomposition; requires numerator degree strictly
/// below denominator degree (DegreeError otherwise).
std::vector<PartialFractionTerm> partial_fractions(const RatFuncW& f);

} // namespace edgegreen
