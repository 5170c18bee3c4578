#include "edgegreen/ratfuncw.hpp"

#include <sstream>

namespace edgegreen {

RatFuncW::RatFuncW(PolyW numerator) : num_(std::move(numerator)) {}

RatFuncW::RatFuncW(PolyW numerator, std::map<Rational, int> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    for (const auto& [root, mult] : den_)
        if (mult <= 0) throw std::domain_error("RatFuncW: nonpositive multiplicity");
    reduce();
}

void RatFuncW::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = den_.begin(); it != den_.end(); ++it) {
            if (num_.evaluate(it->first).is_zero()) {
                num_ = num_.divide_by_linear(it->first);
                if (--it->second == 0) den_.erase(it);
                changed = true;
                break;
            }
        }
    }
}

int RatFuncW::denominator_degree() const {
    int d = 0;
    for (const auto& [root, mult] : den_) d += mult;
    return d;
}

RatFuncW RatFuncW::operator-() const {
    RatFuncW r(*this);
    r.num_ = -r.num_;
    return r;
}

namespace {

PolyW expand_factors(const std::map<Rational, int>& factors) {
    PolyW p(Coefficient(1));
    for (const auto& [root, mult] : factors)
        for (int k = 0; k < mult; ++k) p = p * PolyW::linear(root);
    return p;
}

} // namespace

RatFuncW& RatFuncW::operator+=(const RatFuncW& o) {
    std::map<Rational, int> common = den_;
    for (const auto& [root, mult] : o.den_) {
        auto it = common.find(root);
        if (it == common.end())
            common[root] = mult;
        else
            it->second = std::max(it->second, mult);
    }
    std::map<Rational, int> comp_a, comp_b;
    for (const auto& [root, mult] : common) {
        int ma = 0, mb = 0;
        if (auto it = den_.find(root); it != den_.end()) ma = it->second;
        if (auto it = o.den_.find(root); it != o.den_.end()) mb = it->second;
        if (mult - ma > 0) comp_a[root] = mult - ma;
        if (mult - mb > 0) comp_b[root] = mult - mb;
    }
    PolyW n = num_ * expand_factors(comp_a) + o.num_ * expand_factors(comp_b);
    *this = RatFuncW(std::move(n), std::move(common));
    return *this;
}

RatFuncW& RatFuncW::operator-=(const RatFuncW& o) { return *this += -o; }

RatFuncW operator*(const RatFuncW& a, const RatFuncW& b) {
    std::map<Rational, int> den = a.den_;
    for (const auto& [root, mult] : b.den_) den[root] += mult;
    return RatFuncW(a.num_ * b.num_, std::move(den));
}

RatFuncW operator*(const Coefficient& c, RatFuncW f) {
    f.num_ = c * std::move(f.num_);
    if (f.num_.is_zero()) f.den_.clear();
    return f;
}

RatFuncW operator*(const PolyW& p, const RatFuncW& f) {
    return RatFuncW(p * f.num_, f.den_);
}

RatFuncW RatFuncW::divide_by_factors(const std::map<Rational, int>& factors) const {
    std::map<Rational, int> den = den_;
    for (const auto& [root, mult] : factors) den[root] += mult;
    return RatFuncW(num_, std::move(den));
}

RatFuncW shift(const RatFuncW& f, const Rational& m) {
    std::map<Rational, int> den;
    for (const auto& [root, mult] : f.denominator()) den[root - m] = mult;
    return RatFuncW(f.numerator().shift(m), std::move(den));
}

std::map<Rational, int> pole_set(const RatFuncW& f) { return f.denominator(); }

Coefficient residue_at(const RatFuncW& f, const Rational& w0) {
    auto it = f.denominator().find(w0);
    if (it == f.denominator().end()) return Coefficient();
    if (it->second > 1)
        throw MultiplePoleError("residue_at: pole of multiplicity " +
                                std::to_string(it->second) + " at w = " + w0.str());
    Rational scale(1);
    for (const auto& [root, mult] : f.denominator()) {
        if (root == w0) continue;
        Rational d = w0 - root;
        for (int k = 0; k < mult; ++k) scale *= d;
    }
    return f.numerator().evaluate(w0).div_monomial(Coefficient(scale));
}

std::vector<PartialFractionTerm> partial_fractions(const RatFuncW& f) {
    if (f.is_zero()) return {};
    if (f.numerator().degree() >= f.denominator_degree())
        throw DegreeError("partial_fractions: numerator degree " +
                          std::to_string(f.numerator().degree()) +
                          " not below denominator degree " +
                          std::to_string(f.denominator_degree()));
    std::vector<PartialFractionTerm> out;
    RatFuncW rest = f;
    while (!rest.denominator().empty()) {
        auto [root, mult] = *rest.denominator().begin();
        Rational scale(1);
        for (const auto& [r2, m2] : rest.denominator()) {
            if (r2 == root) continue;
            Rational d = root - r2;
            for (int k = 0; k < m2; ++k) scale *= d;
        }
        Coefficient a = rest.numerator().evaluate(root).div_monomial(Coefficient(scale));
        out.push_back({root, mult, a});
        std::map<Rational, int> den{{root, mult}};
        rest -= RatFuncW(PolyW(a), std::move(den));
    }
    if (!rest.is_zero())
        throw std::logic_error("partial_fractions: nonzero polynomial remainder");
    return out;
}

std::string RatFuncW::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "(" << num_.str(var) << ")";
    if (!den_.empty()) {
        os << "/(";
        bool first = true;
        for (const auto& [root, mult] : den_) {
            if (!first) os << "*";
            first = false;
            os << "(" << var;
            if (root.is_negative())
                os << "+" << (-root).str();
            else if (!root.is_zero())
                os << "-" << root.str();
            os << ")";
            if (mult > 1) os << "^" << mult;
        }
        os << ")";
    }
    return os.str();
}

} // namespace edgegreen
