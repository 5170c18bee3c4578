#include "edgegreen/polyw.hpp"

#include <sstream>

namespace edgegreen {

PolyW::PolyW(Coefficient c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

PolyW::PolyW(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyW PolyW::w() { return PolyW({Coefficient(0), Coefficient(1)}); }

PolyW PolyW::linear(const Rational& root) {
    return PolyW({Coefficient(-root), Coefficient(1)});
}

const Coefficient& PolyW::coeff(int k) const {
    static const Coefficient zero;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

void PolyW::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyW PolyW::operator-() const {
    PolyW r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyW& PolyW::operator+=(const PolyW& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

PolyW& PolyW::operator-=(const PolyW& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

PolyW operator*(const PolyW& a, const PolyW& b) {
    if (a.is_zero() || b.is_zero()) return PolyW();
    std::vector<Coefficient> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyW(std::move(out));
}

PolyW operator*(const Coefficient& c, PolyW p) {
    for (auto& pc : p.coeffs_) pc *= c;
    p.trim();
    return p;
}

Coefficient PolyW::evaluate(const Rational& w0) const { return evaluate(Coefficient(w0)); }

Coefficient PolyW::evaluate(const Coefficient& w0) const {
    Coefficient acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w0 + *it;
    return acc;
}

PolyW PolyW::shift(const Rational& m) const {
    // p(w + m) by Horner in (w + m).
    PolyW acc;
    PolyW wm = PolyW({Coefficient(m), Coefficient(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * wm + PolyW(*it);
    return acc;
}

PolyW PolyW::deriv() const {
    if (coeffs_.size() <= 1) return PolyW();
    std::vector<Coefficient> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = Coefficient(Rational(static_cast<long long>(k))) * coeffs_[k];
    return PolyW(std::move(out));
}

PolyW PolyW::divide_by_linear(const Rational& root) const {
    // Synthetic division by (w - root).
    if (is_zero()) throw std::domain_error("PolyW: dividing zero polynomial");
    std::vector<Coefficient> q(coeffs_.size() - 1);
    Coefficient carry;
    for (int k = degree(); k >= 1; --k) {
        carry = coeffs_[k] + Coefficient(root) * carry;
        q[k - 1] = carry;
    }
    Coefficient rem = coeffs_[0] + Coefficient(root) * carry;
    if (!rem.is_zero()) throw std::domain_error("PolyW: root does not divide polynomial");
    return PolyW(std::move(q));
}

std::string PolyW::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << "(" << coeffs_[k].str() << ")";
            continue;
        }
        os << "(" << coeffs_[k].str() << ")*" << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

} // namespace edgegreen
