#pragma once

#include "edgegreen/coefficient.hpp"

#include <vector>

namespace edgegreen {

struct DivisionByZeroSeries : std::runtime_error {
    explicit DivisionByZeroSeries(const std::string& what) : std::runtime_error(what) {}
};

struct OrderError : std::runtime_error {
    explicit OrderError(const std::string& what) : std::runtime_error(what) {}
};

/// Truncated power series in the cone distance r, exact through `order`.
/// An optional leading offset lets a series start at r^k0.
class RSeries {
public:
    RSeries() = default;
    RSeries(int order, int k0 = 0);

    static RSeries constant(Coefficient c, int order);
    /// r^k with the given truncation order.
    static RSeries power(int k, int order);

    int order() const { return order_; }
    int offset() const { return k0_; }
    const Coefficient& coeff(int k) const; // coefficient of r^k
    void set_coeff(int k, Coefficient c);

    /// Smallest exponent with a nonzero coefficient, or order()+1 if none.
    int min_exponent() const;

    RSeries operator-() const;
    friend RSeries operator+(const RSeries& a, const RSeries& b);
    friend RSeries operator-(const RSeries& a, const RSeries& b);
    friend RSeries operator*(const RSeries& a, const RSeries& b);
    friend RSeries operator*(const Coefficient& c, RSeries s);

    friend bool operator==(const RSeries& a, const RSeries& b);
    friend bool operator!=(const RSeries& a, const RSeries& b) { return !(a == b); }

    /// Multiply by r^k (shifts the window; truncation order grows by k).
    RSeries mul_power(int k) const;
    RSeries truncate(int order) const;

    /// 1/this; requires a nonzero constant term.
    RSeries reciprocal() const;
    /// this^(-1/2); requires constant term 1 (rationalized forms only).
    RSeries inv_sqrt() const;
    /// exp(this); requires zero constant term.
    RSeries exp() const;
    RSeries deriv_t() const;

    double eval(double r, const std::map<Gen, double>& vals) const;

    std::string str() const;

private:
    int order_ = -1; // truncation order (inclusive); -1 = zero series
    int k0_ = 0;
    std::vector<Coefficient> coeffs_; // coeffs_[j] multiplies r^(k0_+j)
};

enum class SeriesOp { Add, Sub, Mul, Reciprocal, InvSqrt };

/// Dispatch wrapper; Reciprocal/InvSqrt ignore b.
RSeries series_arith(SeriesOp op, const RSeries& a, const RSeries& b = RSeries());

} // namespace edgegreen
