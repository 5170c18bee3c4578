#include "edgegreen/coefficient.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace edgegreen {

namespace {

const char* kGenNames[kNumGens] = {"t",  "Z",  "E",  "a",  "s",  "i",  "ct",
                                   "cs", "Z1", "Z2", "Za", "Zb", "K",  "tR"};

} // namespace

Monomial mono_one() {
    Monomial m{};
    m.fill(0);
    return m;
}

Monomial mono_gen(Gen g, int exp) {
    Monomial m = mono_one();
    m[static_cast<int>(g)] = static_cast<int16_t>(exp);
    return m;
}

Coefficient::Coefficient(long long n) {
    if (n != 0) terms_[mono_one()] = Rational(n);
}

Coefficient::Coefficient(const Rational& r) {
    if (!r.is_zero()) terms_[mono_one()] = r;
}

Coefficient::Coefficient(const Rational& r, const Monomial& m) { add_term(m, r); }

Coefficient Coefficient::gen(Gen g, int exp) {
    Coefficient c;
    c.add_term(mono_gen(g, exp), Rational(1));
    return c;
}

void Coefficient::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    Monomial mm = m;
    Rational cc = c;
    // s^2 -> 2
    int se = mm[static_cast<int>(Gen::S)];
    if (se < 0) throw std::domain_error("Coefficient: negative sqrt2 exponent");
    while (se >= 2) {
        se -= 2;
        cc *= Rational(2);
    }
    mm[static_cast<int>(Gen::S)] = static_cast<int16_t>(se);
    // i^2 -> -1
    int ie = mm[static_cast<int>(Gen::I)];
    if (ie < 0) throw std::domain_error("Coefficient: negative i exponent");
    int q = ie / 2;
    if (q % 2 == 1) cc = -cc;
    mm[static_cast<int>(Gen::I)] = static_cast<int16_t>(ie % 2);
    for (int g = 0; g < kNumGens; ++g) {
        if (g != static_cast<int>(Gen::T) && mm[g] < 0)
            throw std::domain_error("Coefficient: negative exponent on non-t generator");
    }
    auto it = terms_.find(mm);
    if (it == terms_.end()) {
        terms_.emplace(mm, cc);
    } else {
        it->second += cc;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Coefficient::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == mono_one();
}

Rational Coefficient::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("Coefficient: not a pure rational: " + str());
    return terms_.begin()->second;
}

Coefficient Coefficient::operator-() const {
    Coefficient r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    Coefficient r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (int g = 0; g < kNumGens; ++g)
                m[g] = static_cast<int16_t>(ma[g] + mb[g]);
            r.add_term(m, ca * cb);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

Coefficient Coefficient::div_monomial(const Coefficient& m) const {
    if (m.terms_.size() != 1)
        throw std::domain_error("Coefficient: divisor must be a single monomial");
    const auto& [dm, dc] = *m.terms_.begin();
    for (int g = 0; g < kNumGens; ++g) {
        Gen gg = static_cast<Gen>(g);
        if (dm[g] != 0 && gg != Gen::T && gg != Gen::S && gg != Gen::I)
            throw std::domain_error("Coefficient: monomial not invertible: " + m.str());
    }
    Coefficient inv(dc.inverse());
    if (int te = dm[static_cast<int>(Gen::T)]; te != 0)
        inv *= Coefficient(Rational(1), mono_gen(Gen::T, -te));
    // s^-1 = s/2, i^-1 = -i; exponents are already reduced to {0,1}.
    if (dm[static_cast<int>(Gen::S)] == 1)
        inv *= Coefficient(Rational(1, 2), mono_gen(Gen::S));
    if (dm[static_cast<int>(Gen::I)] == 1)
        inv *= Coefficient(Rational(-1), mono_gen(Gen::I));
    return *this * inv;
}

Coefficient Coefficient::substitute(const std::map<Gen, Coefficient>& repl) const {
    Coefficient r;
    for (const auto& [m, c] : terms_) {
        Coefficient term(c);
        Monomial rest = m;
        for (const auto& [g, val] : repl) {
            int e = rest[static_cast<int>(g)];
            if (e < 0) throw std::domain_error("Coefficient: substitute into negative power");
            rest[static_cast<int>(g)] = 0;
            for (int k = 0; k < e; ++k) term *= val;
        }
        term *= Coefficient(Rational(1), rest);
        r += term;
    }
    return r;
}

Coefficient Coefficient::deriv_t() const {
    Coefficient r;
    for (const auto& [m, c] : terms_) {
        int e = m[static_cast<int>(Gen::T)];
        if (e == 0) continue;
        Monomial mm = m;
        mm[static_cast<int>(Gen::T)] = static_cast<int16_t>(e - 1);
        r.add_term(mm, c * Rational(e));
    }
    return r;
}

Coefficient Coefficient::deriv_theta2() const {
    // d/dtheta ct = -cs ; d/dtheta cs = -2 ct cs
    Coefficient r;
    for (const auto& [m, c] : terms_) {
        int ect = m[static_cast<int>(Gen::CT)];
        int ecs = m[static_cast<int>(Gen::CS)];
        if (ect > 0) {
            Monomial mm = m;
            mm[static_cast<int>(Gen::CT)] = static_cast<int16_t>(ect - 1);
            mm[static_cast<int>(Gen::CS)] = static_cast<int16_t>(ecs + 1);
            r.add_term(mm, c * Rational(-ect));
        }
        if (ecs > 0) {
            Monomial mm = m;
            mm[static_cast<int>(Gen::CT)] = static_cast<int16_t>(ect + 1);
            r.add_term(mm, c * Rational(-2 * ecs));
        }
    }
    return r;
}

bool Coefficient::depends_on(Gen g) const {
    for (const auto& [m, c] : terms_)
        if (m[static_cast<int>(g)] != 0) return true;
    return false;
}

double Coefficient::eval(const std::map<Gen, double>& vals) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double term = c.to_double();
        for (int g = 0; g < kNumGens; ++g) {
            if (m[g] == 0) continue;
            Gen gg = static_cast<Gen>(g);
            double v;
            if (gg == Gen::S) {
                v = std::sqrt(2.0);
            } else {
                auto it = vals.find(gg);
                if (it == vals.end())
                    throw std::domain_error(std::string("Coefficient::eval: unassigned generator ") +
                                            kGenNames[g]);
                v = it->second;
            }
            term *= std::pow(v, m[g]);
        }
        acc += term;
    }
    return acc;
}

std::string Coefficient::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational r = c;
        if (first) {
            if (r.is_negative()) {
                os << "-";
                r = -r;
            }
        } else {
            os << (r.is_negative() ? " - " : " + ");
            if (r.is_negative()) r = -r;
        }
        first = false;
        bool any_gen = false;
        for (int g = 0; g < kNumGens; ++g)
            if (m[g] != 0) any_gen = true;
        if (!any_gen) {
            os << r.str();
            continue;
        }
        bool lead = true;
        if (r != Rational(1)) {
            os << r.str();
            lead = false;
        }
        for (int g = 0; g < kNumGens; ++g) {
            if (m[g] == 0) continue;
            if (!lead) os << "*";
            lead = false;
            os << kGenNames[g];
            if (m[g] != 1) os << "^" << m[g];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.str(); }

// ---------------------------------------------------------------------------
// Parser for the rendered form: terms of rationals and generator powers
// joined by '+'/'-', products by '*', exponents by '^'.  Parentheses allowed.
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::domain_error("Coefficient::parse: " + what + " at position " +
                                std::to_string(pos) + " in \"" + s + "\"");
    }

    Coefficient parse_expr() {
        Coefficient acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) {
                acc += parse_term();
            } else if (eat('-')) {
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    Coefficient parse_term() {
        Coefficient acc = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                acc *= parse_factor();
            } else if (eat('/')) {
                acc = acc.div_monomial(parse_factor());
            } else {
                break;
            }
        }
        return acc;
    }

    Coefficient parse_factor() {
        skip_ws();
        if (eat('(')) {
            Coefficient inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return parse_power_suffix(inner);
        }
        if (eat('-')) return -parse_factor();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_power_suffix(parse_number());
        return parse_power_suffix(parse_generator());
    }

    Coefficient parse_power_suffix(Coefficient base) {
        skip_ws();
        if (!eat('^')) return base;
        bool neg = eat('-');
        int e = parse_int();
        if (neg) e = -e;
        if (e < 0) {
            Coefficient acc(1);
            for (int k = 0; k < -e; ++k) acc = acc.div_monomial(base);
            return acc;
        }
        Coefficient acc(1);
        for (int k = 0; k < e; ++k) acc *= base;
        return acc;
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    }

    Coefficient parse_number() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        BigInt num(s.substr(start, pos - start));
        return Coefficient(Rational(num));
    }

    Coefficient parse_generator() {
        skip_ws();
        // Longest match first.
        static const std::vector<std::pair<std::string, Gen>> names = {
            {"tR", Gen::TR}, {"Z1", Gen::Z1}, {"Z2", Gen::Z2}, {"Za", Gen::ZA},
            {"Zb", Gen::ZB}, {"ct", Gen::CT}, {"cs", Gen::CS}, {"t", Gen::T},
            {"Z", Gen::Z},   {"E", Gen::E},   {"a", Gen::A},   {"s", Gen::S},
            {"i", Gen::I},   {"K", Gen::K}};
        for (const auto& [name, g] : names) {
            if (s.compare(pos, name.size(), name) == 0) {
                pos += name.size();
                return Coefficient::gen(g);
            }
        }
        fail("expected generator");
    }
};

} // namespace

Coefficient Coefficient::parse(const std::string& s) {
    Parser p(s);
    Coefficient c = p.parse_expr();
    p.skip_ws();
    if (p.pos != s.size()) p.fail("trailing input");
    return c;
}

} // namespace edgegreen
