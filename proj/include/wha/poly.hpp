#pragma once

// Multivariate polynomials with rational coefficients over a fixed list of named
// parameters, plus a small expression parser ("1/2*r^2 - e", "-(a+1)*b").

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "wha/scalar.hpp"

namespace wha {

class Poly {
public:
    using Monomial = std::vector<int>;  // exponent per variable

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}
    static Poly constant(std::size_t nvars, const Rational& c) {
        Poly p(nvars);
        if (sgn(c) != 0) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }
    static Poly variable(std::size_t nvars, std::size_t v) {
        Poly p(nvars);
        Monomial m(nvars, 0);
        m[v] = 1;
        p.terms_[m] = 1;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    int degree_in(std::size_t v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
        return d;
    }

    Rational eval(const std::vector<Rational>& x) const {
        Rational s = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t v = 0; v < nvars_; ++v)
                for (int k = 0; k < m[v]; ++k) t *= x[v];
            s += t;
        }
        return s;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) {
            Rational& t = terms_[m];
            t += c;
            if (sgn(t) == 0) terms_.erase(m);
        }
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Poly operator-(Poly a, const Poly& b) { return a += -b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(std::max(a.nvars_, b.nvars_));
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(r.nvars_, 0);
                for (std::size_t v = 0; v < r.nvars_; ++v) m[v] = ma[v] + mb[v];
                Rational& t = r.terms_[m];
                t += ca * cb;
                if (sgn(t) == 0) r.terms_.erase(m);
            }
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            bool constant_term = true;
            for (int e : m) constant_term = constant_term && e == 0;
            Rational a = abs(c);
            std::string t;
            if (constant_term || a != 1) t = a.get_str();
            for (std::size_t v = 0; v < nvars_; ++v) {
                if (m[v] == 0) continue;
                if (!t.empty()) t += "*";
                t += names[v];
                if (m[v] > 1) t += "^" + std::to_string(m[v]);
            }
            if (out.empty()) out = (sgn(c) < 0 ? "-" : "") + t;
            else out += (sgn(c) < 0 ? " - " : " + ") + t;
        }
        return out;
    }

private:
    std::size_t nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

namespace detail {

// Recursive descent: expr := term (('+'|'-') term)*, term := factor (('*'|'/') factor)*,
// factor := ('-'|'+') factor | atom ('^' int)?, atom := number | name | '(' expr ')'.
// Division only by constants.
class PolyParser {
public:
    PolyParser(const std::string& s, const std::vector<std::string>& names) : s_(s), names_(names) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    const std::string& s_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("expression '" + s_ + "' at offset " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Poly expr() {
        Poly p = term();
        while (true) {
            if (eat('+')) p += term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }
    Poly term() {
        Poly p = factor();
        while (true) {
            if (eat('*')) p = p * factor();
            else if (eat('/')) {
                Poly d = factor();
                if (d.terms().size() != 1 || d.terms().begin()->first != Poly::Monomial(names_.size(), 0))
                    fail("division by a non-constant");
                p = p * Poly::constant(names_.size(), 1 / d.terms().begin()->second);
            } else return p;
        }
    }
    Poly factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Poly a = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            Poly r = Poly::constant(names_.size(), 1);
            for (int k = 0; k < e; ++k) r = r * a;
            return r;
        }
        return a;
    }
    Poly atom() {
        skip();
        if (eat('(')) {
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly::constant(names_.size(), Rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            for (std::size_t v = 0; v < names_.size(); ++v)
                if (names_[v] == name) return Poly::variable(names_.size(), v);
            fail("unknown parameter '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace detail

inline Poly parse_poly(const std::string& s, const std::vector<std::string>& names) {
    return detail::PolyParser(s, names).parse();
}

}  // namespace wha
