#include "edgegreen/rseries.hpp"

#include <algorithm>
#include <sstream>

namespace edgegreen {

RSeries::RSeries(int order, int k0) : order_(order), k0_(k0) {
    if (order >= k0) coeffs_.assign(order - k0 + 1, Coefficient());
}

RSeries RSeries::constant(Coefficient c, int order) {
    RSeries s(order, 0);
    s.set_coeff(0, std::move(c));
    return s;
}

RSeries RSeries::power(int k, int order) {
    RSeries s(order, 0);
    if (k <= order) s.set_coeff(k, Coefficient(1));
    return s;
}

const Coefficient& RSeries::coeff(int k) const {
    static const Coefficient zero;
    int j = k - k0_;
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[j];
}

void RSeries::set_coeff(int k, Coefficient c) {
    int j = k - k0_;
    if (j < 0 || j >= static_cast<int>(coeffs_.size()))
        throw std::out_of_range("RSeries::set_coeff: exponent outside window");
    coeffs_[j] = std::move(c);
}

int RSeries::min_exponent() const {
    for (int j = 0; j < static_cast<int>(coeffs_.size()); ++j)
        if (!coeffs_[j].is_zero()) return k0_ + j;
    return order_ + 1;
}

RSeries RSeries::operator-() const {
    RSeries r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RSeries operator+(const RSeries& a, const RSeries& b) {
    int order = std::min(a.order_, b.order_);
    int k0 = std::min(a.k0_, b.k0_);
    RSeries r(order, k0);
    for (int k = k0; k <= order; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

RSeries operator-(const RSeries& a, const RSeries& b) { return a + (-b); }

RSeries operator*(const RSeries& a, const RSeries& b) {
    // Exactness through min(na + kb0, nb + ka0): a term r^j with j beyond
    // that bound could receive contributions from truncated coefficients.
    int order = std::min(a.order_ + b.k0_, b.order_ + a.k0_);
    int k0 = a.k0_ + b.k0_;
    RSeries r(order, k0);
    for (int i = a.k0_; i <= a.order_; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = b.k0_; j <= b.order_ && i + j <= order; ++j)
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
    return r;
}

RSeries operator*(const Coefficient& c, RSeries s) {
    for (auto& sc : s.coeffs_) sc *= c;
    return s;
}

bool operator==(const RSeries& a, const RSeries& b) {
    if (a.order_ != b.order_) return false;
    int k0 = std::min(a.k0_, b.k0_);
    for (int k = k0; k <= a.order_; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

RSeries RSeries::mul_power(int k) const {
    RSeries r(*this);
    r.k0_ += k;
    r.order_ += k;
    return r;
}

RSeries RSeries::truncate(int order) const {
    int k0 = std::min(k0_, 0);
    RSeries r(order, k0);
    for (int k = k0; k <= order; ++k) r.set_coeff(k, coeff(k));
    return r;
}

RSeries RSeries::reciprocal() const {
    if (k0_ > 0 || coeff(0).is_zero())
        throw DivisionByZeroSeries("RSeries::reciprocal: zero constant term");
    Coefficient c0 = coeff(0);
    RSeries r(order_, 0);
    r.set_coeff(0, Coefficient(1).div_monomial(c0));
    for (int n = 1; n <= order_; ++n) {
        Coefficient acc;
        for (int k = 1; k <= n; ++k) acc += coeff(k) * r.coeff(n - k);
        r.set_coeff(n, (-acc).div_monomial(c0));
    }
    return r;
}

RSeries RSeries::inv_sqrt() const {
    if (k0_ > 0 || coeff(0) != Coefficient(1))
        throw std::domain_error("RSeries::inv_sqrt: constant term must be 1");
    // Newton iteration y <- y*(3 - x*y^2)/2, quadratic in truncation order.
    RSeries y = RSeries::constant(Coefficient(1), order_);
    RSeries three = RSeries::constant(Coefficient(3), order_);
    int correct = 1;
    while (correct <= order_) {
        RSeries x = truncate(order_);
        y = Coefficient(Rational(1, 2)) * (y * (three - x * y * y)).truncate(order_);
        correct *= 2;
    }
    return y;
}

RSeries RSeries::exp() const {
    if (k0_ <= 0 && !coeff(0).is_zero())
        throw std::domain_error("RSeries::exp: constant term must vanish");
    // y' = g' y  =>  n*y_n = sum_{k=1..n} k*g_k*y_{n-k}
    RSeries y(order_, 0);
    y.set_coeff(0, Coefficient(1));
    for (int n = 1; n <= order_; ++n) {
        Coefficient acc;
        for (int k = 1; k <= n; ++k)
            acc += Coefficient(Rational(k)) * coeff(k) * y.coeff(n - k);
        y.set_coeff(n, acc.div_monomial(Coefficient(Rational(n))));
    }
    return y;
}

RSeries RSeries::deriv_t() const {
    RSeries r(*this);
    for (auto& c : r.coeffs_) c = c.deriv_t();
    return r;
}

double RSeries::eval(double r, const std::map<Gen, double>& vals) const {
    double acc = 0.0;
    for (int k = order_; k >= k0_; --k) acc = acc * r + coeff(k).eval(vals);
    for (int k = 0; k < k0_; ++k) acc *= r;
    return acc;
}

std::string RSeries::str() const {
    std::ostringstream os;
    os << "[";
    for (int k = k0_; k <= order_; ++k) {
        if (k > k0_) os << ", ";
        os << coeff(k).str();
    }
    os << "]";
    return os.str();
}

RSeries series_arith(SeriesOp op, const RSeries& a, const RSeries& b) {
    switch (op) {
    case SeriesOp::Add: return a + b;
    case SeriesOp::Sub: return a - b;
    case SeriesOp::Mul: return a * b;
    case SeriesOp::Reciprocal: return a.reciprocal();
    case SeriesOp::InvSqrt: return a.inv_sqrt();
    }
    throw std::logic_error("series_arith: unknown op");
}

} // namespace edgegreen
