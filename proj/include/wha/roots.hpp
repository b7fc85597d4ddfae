#pragma once

// Rational roots of a polynomial with rational coefficients.
// Reduce to a monic integer polynomial, isolate its integer roots by Sturm-sequence
// bisection over integer intervals, then map back.

#include <algorithm>
#include <vector>

#include "wha/scalar.hpp"

namespace wha {

namespace detail {

using QPoly = std::vector<Rational>;  // coefficient of x^i at index i

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline QPoly qpoly_rem(QPoly a, const QPoly& b) {
    qpoly_trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t t = 0; t <= db; ++t) a[shift + t] -= f * b[t];
        a.pop_back();
        qpoly_trim(a);
    }
    return a;
}

inline QPoly qpoly_derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return d;
}

inline QPoly qpoly_gcd(QPoly a, QPoly b) {
    qpoly_trim(a);
    qpoly_trim(b);
    while (!b.empty()) {
        QPoly r = qpoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline QPoly qpoly_divexact(QPoly a, const QPoly& b) {
    qpoly_trim(a);
    if (a.size() < b.size()) return {};
    QPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t t = 0; t < b.size(); ++t) a[shift + t] -= f * b[t];
        a.pop_back();
        qpoly_trim(a);
    }
    return q;
}

template <class T>
Rational qpoly_eval(const QPoly& p, const T& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

inline int sign_changes(const std::vector<QPoly>& chain, const mpz_class& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sgn(qpoly_eval(p, Rational(x)));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Integer roots in (lo, hi] of a squarefree polynomial with Sturm chain `chain`.
inline void integer_roots_in(const std::vector<QPoly>& chain, mpz_class lo, mpz_class hi, std::vector<mpz_class>& out) {
    int count = sign_changes(chain, lo) - sign_changes(chain, hi);
    if (count <= 0) return;
    if (hi - lo == 1) {
        if (sgn(qpoly_eval(chain[0], Rational(hi))) == 0) out.push_back(hi);
        return;
    }
    mpz_class mid = lo + (hi - lo) / 2;
    integer_roots_in(chain, lo, mid, out);
    integer_roots_in(chain, mid, hi, out);
}

}  // namespace detail

/// Distinct rational roots, ascending. Coefficients low-to-high; all must be rational.
inline std::vector<Rational> rational_roots(const std::vector<Scalar>& coeffs) {
    detail::QPoly p;
    for (const auto& c : coeffs) p.push_back(c.to_rational());
    detail::qpoly_trim(p);
    if (p.empty()) throw MathError("zero-polynomial", "every value is a root of the zero polynomial");
    std::vector<Rational> roots;
    // factor out x^m
    std::size_t low = 0;
    while (sgn(p[low]) == 0) ++low;
    if (low > 0) {
        roots.push_back(0);
        p.erase(p.begin(), p.begin() + static_cast<long>(low));
    }
    const std::size_t deg = p.size() - 1;
    if (deg == 0) return roots;

    // integer coefficients, then y = a_d x makes it monic
    mpz_class lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) z[i] = p[i].get_num() * (lcm / p[i].get_den());
    const mpz_class ad = z[deg];
    detail::QPoly q(deg + 1);
    mpz_class pw = 1;  // ad^(deg-1-i), built from the top
    for (std::size_t i = deg; i-- > 0;) {
        q[i] = Rational(z[i] * pw);
        pw *= ad;
    }
    q[deg] = 1;

    // squarefree part keeps Sturm counting honest
    detail::QPoly g = detail::qpoly_gcd(q, detail::qpoly_derivative(q));
    detail::QPoly sq = g.size() > 1 ? detail::qpoly_divexact(q, g) : q;

    std::vector<detail::QPoly> chain{sq, detail::qpoly_derivative(sq)};
    while (chain.back().size() > 1) {
        detail::QPoly r = detail::qpoly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    mpz_class bound = 1;
    for (std::size_t i = 0; i < deg; ++i) {
        mpz_class a = abs(q[i].get_num());
        if (a > bound) bound = a;
    }
    bound += 1;
    std::vector<mpz_class> ys;
    detail::integer_roots_in(chain, -bound - 1, bound, ys);
    for (const auto& y : ys) {
        Rational x(y, ad);
        x.canonicalize();
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace wha
