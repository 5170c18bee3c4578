#pragma once

#include "edgegreen/coefficient.hpp"

#include <vector>

namespace edgegreen {

/// Dense polynomial in the Mellin covariable w with Coefficient entries.
class PolyW {
public:
    PolyW() = default;
    PolyW(Coefficient c);
    explicit PolyW(std::vector<Coefficient> coeffs);

    /// w itself.
    static PolyW w();
    /// Monic linear factor (w - root).
    static PolyW linear(const Rational& root);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Coefficient& coeff(int k) const;
    const std::vector<Coefficient>& coeffs() const { return coeffs_; }

    PolyW operator-() const;
    PolyW& operator+=(const PolyW& o);
    PolyW& operator-=(const PolyW& o);
    friend PolyW operator+(PolyW a, const PolyW& b) { return a += b; }
    friend PolyW operator-(PolyW a, const PolyW& b) { return a -= b; }
    friend PolyW operator*(const PolyW& a, const PolyW& b);
    friend PolyW operator*(const Coefficient& c, PolyW p);

    friend bool operator==(const PolyW& a, const PolyW& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyW& a, const PolyW& b) { return !(a == b); }

    Coefficient evaluate(const Rational& w0) const;
    Coefficient evaluate(const Coefficient& w0) const;

    /// (T^m p)(w) = p(w + m).
    PolyW shift(const Rational& m) const;
    PolyW deriv() const;

    /// Exact division by the monic factor (w - root); throws if the root
    /// does not divide.
    PolyW divide_by_linear(const Rational& root) const;

    /// Apply a scalar ring map to every coefficient.
    template <typename F>
    PolyW map(F&& f) const {
        std::vector<Coefficient> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        PolyW p;
        p.coeffs_ = std::move(out);
        p.trim();
        return p;
    }

    std::string str(const std::string& var = "w") const;

private:
    void trim();
    std::vector<Coefficient> coeffs_; // coeffs_[k] multiplies w^k
};

} // namespace edgegreen
