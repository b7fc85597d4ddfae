#pragma once

// Exact scalars in the cyclotomic field Q(zeta_N).
//
// A value is stored as a polynomial in zeta_N of degree < phi(N), reduced modulo the
// N-th cyclotomic polynomial. Values that happen to be rational are always stored with
// conductor 1, so every value has exactly one representation and == is structural.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wha/error.hpp"

namespace wha {

using Rational = mpq_class;

namespace detail {

inline int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Integer polynomials, coefficient of x^i at index i.
using ZPoly = std::vector<mpz_class>;

// Exact division a / b with b monic; caller guarantees divisibility.
inline ZPoly zpoly_div_monic(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    ZPoly q(a.size() - db);
    for (std::size_t d = a.size() - 1; d + 1 >= b.size(); --d) {
        mpz_class c = a[d];
        q[d - db] = c;
        if (c != 0)
            for (std::size_t t = 0; t <= db; ++t) a[d - db + t] -= c * b[t];
        if (d == db) break;
    }
    return q;
}

/// Phi_n, monic, degree phi(n). Cached; returned reference stays valid.
inline const ZPoly& cyclotomic_polynomial(int n) {
    static std::mutex mu;
    static std::map<int, ZPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d
    ZPoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = zpoly_div_monic(p, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

inline Rational parse_rational(std::string_view text) {
    std::string s = trim(text);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) throw ParseError("invalid rational '" + s + "'");
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::size_t den = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den;
        if (den == 0) throw ParseError("invalid rational '" + s + "'");
    }
    if (i != s.size()) throw ParseError("invalid rational '" + s + "'");
    std::string body = s[0] == '+' ? s.substr(1) : s;
    Rational q;
    if (q.set_str(body, 10) != 0) throw ParseError("invalid rational '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace detail

class Scalar {
public:
    Scalar() : n_(1), c_(1) {}
    Scalar(int v) : n_(1), c_{Rational(v)} {}
    Scalar(long v) : n_(1), c_{Rational(v)} {}
    Scalar(const Rational& q) : n_(1), c_{q} {}
    Scalar(long num, long den) : n_(1), c_{Rational(num, den)} {
        if (den == 0) throw DivisionByZero();
        c_[0].canonicalize();
    }

    /// exp(2 pi i / n). zeta(1) = 1, zeta(2) = -1.
    static Scalar zeta(int n) {
        if (n < 1) throw InputError("conductor must be positive");
        std::vector<Rational> c(2);
        c[1] = 1;
        return from_coefficients(n, std::move(c));
    }

    /// Build sum_i coeffs[i] zeta_n^i for any number of coefficients; reduces.
    static Scalar from_coefficients(int n, std::vector<Rational> coeffs) {
        if (n < 1) throw InputError("conductor must be positive");
        Scalar s;
        if (coeffs.empty()) return s;
        // zeta_n^n = 1 folds high powers first; keeps the reduction short.
        if (coeffs.size() > static_cast<std::size_t>(n)) {
            for (std::size_t i = n; i < coeffs.size(); ++i) coeffs[i % n] += coeffs[i];
            coeffs.resize(n);
        }
        s.n_ = n;
        s.c_ = std::move(coeffs);
        s.reduce();
        return s;
    }

    int conductor() const { return n_; }
    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_rational() const { return n_ == 1; }
    bool is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }
    bool is_one() const { return n_ == 1 && c_[0] == 1; }

    const Rational& to_rational() const {
        if (n_ != 1) throw MathError("not-rational", to_string() + " is not rational");
        return c_[0];
    }

    /// Sum of absolute values of the coefficients; only used to rank residual sizes.
    Rational height() const {
        Rational h = 0;
        for (const auto& c : c_) h += abs(c);
        return h;
    }

    Scalar operator-() const {
        Scalar r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b, false); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return add(a, b, true); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.n_ == 1 && b.n_ == 1) return Scalar(Rational(a.c_[0] * b.c_[0]));
        if (a.n_ == 1) return b.scaled(a.c_[0]);
        if (b.n_ == 1) return a.scaled(b.c_[0]);
        if (a.n_ != b.n_) throw IncompatibleConductors(a.n_, b.n_);
        std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
        }
        Scalar r;
        r.n_ = a.n_;
        r.c_ = std::move(p);
        r.reduce();
        return r;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (n_ == 1) return Scalar(Rational(1 / c_[0]));
        // Solve (this * y) = 1: columns of M are the coefficients of this * zeta^j.
        const std::size_t d = c_.size();
        std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
        Scalar col = *this;
        const Scalar z = zeta(n_);
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Rational> v = col.padded(n_);
            for (std::size_t i = 0; i < d; ++i) m[i][j] = v[i];
            col = col * z;
        }
        m[0][d] = 1;
        for (std::size_t c = 0; c < d; ++c) {
            std::size_t p = c;
            while (p < d && sgn(m[p][c]) == 0) ++p;
            if (p == d) throw DivisionByZero();  // cannot happen in a field
            std::swap(m[p], m[c]);
            Rational inv = 1 / m[c][c];
            for (std::size_t k = c; k <= d; ++k) m[c][k] *= inv;
            for (std::size_t r = 0; r < d; ++r) {
                if (r == c || sgn(m[r][c]) == 0) continue;
                Rational f = m[r][c];
                for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
            }
        }
        std::vector<Rational> y(d);
        for (std::size_t i = 0; i < d; ++i) y[i] = m[i][d];
        return from_coefficients(n_, std::move(y));
    }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar result(1), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// Coefficients padded to length phi(n) for a conductor n compatible with this value.
    std::vector<Rational> padded(int n) const {
        if (n_ != 1 && n_ != n) throw IncompatibleConductors(n_, n);
        std::vector<Rational> v(detail::euler_phi(n));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
        return v;
    }

    std::string to_string() const {
        if (n_ == 1) return c_[0].get_str();
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += c_[i].get_str();
        }
        return s + "] @ " + std::to_string(n_);
    }

    /// Accepts "p", "p/q", and "[p0/q0, p1/q1, ...] @ N".
    static Scalar parse(std::string_view text) {
        std::string s = detail::trim(text);
        if (s.empty()) throw ParseError("empty scalar");
        if (s.front() != '[') return Scalar(detail::parse_rational(s));
        auto close = s.find(']');
        if (close == std::string::npos) throw ParseError("missing ']' in scalar '" + s + "'");
        std::string tail = detail::trim(std::string_view(s).substr(close + 1));
        if (tail.empty() || tail.front() != '@') throw ParseError("missing '@ N' in scalar '" + s + "'");
        std::string nstr = detail::trim(std::string_view(tail).substr(1));
        if (nstr.empty() || !std::all_of(nstr.begin(), nstr.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw ParseError("invalid conductor in scalar '" + s + "'");
        int n = std::stoi(nstr);
        if (n < 1) throw ParseError("conductor must be positive in '" + s + "'");
        std::vector<Rational> coeffs;
        std::string body = s.substr(1, close - 1);
        std::size_t start = 0;
        if (!detail::trim(body).empty()) {
            while (true) {
                auto comma = body.find(',', start);
                coeffs.push_back(detail::parse_rational(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        if (coeffs.size() > static_cast<std::size_t>(detail::euler_phi(n)))
            throw ParseError("too many coefficients for conductor " + std::to_string(n) + " in '" + s + "'");
        return from_coefficients(n, std::move(coeffs));
    }

    /// Strict weak order on representations (conductor, then coefficients); for sorting only.
    friend bool canonical_less(const Scalar& a, const Scalar& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

private:
    static Scalar add(const Scalar& a, const Scalar& b, bool subtract) {
        if (a.n_ == 1 && b.n_ == 1)
            return Scalar(subtract ? Rational(a.c_[0] - b.c_[0]) : Rational(a.c_[0] + b.c_[0]));
        int n = a.n_ == 1 ? b.n_ : a.n_;
        if (b.n_ != 1 && b.n_ != n) throw IncompatibleConductors(a.n_, b.n_);
        std::vector<Rational> v = a.padded(n);
        const auto& bc = b.c_;
        for (std::size_t i = 0; i < bc.size(); ++i) {
            if (subtract) v[i] -= bc[i];
            else v[i] += bc[i];
        }
        Scalar r;
        r.n_ = n;
        r.c_ = std::move(v);
        r.demote();
        return r;
    }

    Scalar scaled(const Rational& q) const {
        if (sgn(q) == 0) return Scalar();
        Scalar r = *this;
        for (auto& c : r.c_) c *= q;
        return r;
    }

    void reduce() {
        const int phi = detail::euler_phi(n_);
        if (n_ > 1 && c_.size() > static_cast<std::size_t>(phi)) {
            const auto& cyc = detail::cyclotomic_polynomial(n_);
            for (std::size_t d = c_.size() - 1; d >= static_cast<std::size_t>(phi); --d) {
                if (sgn(c_[d]) == 0) continue;
                Rational c = c_[d];
                for (int t = 0; t <= phi; ++t) c_[d - phi + t] -= c * cyc[t];
            }
        }
        c_.resize(phi);
        demote();
    }

    // Rational values go to conductor 1.
    void demote() {
        if (n_ == 1) return;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return;
        c_.resize(1);
        n_ = 1;
    }

    int n_;
    std::vector<Rational> c_;
};

}  // namespace wha
