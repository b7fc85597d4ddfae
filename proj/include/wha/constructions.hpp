#pragma once

// Builders: adjoined units, chain/max algebras, Sweedler and Taft families, group algebras.
// Basis order is fixed per builder and always puts adjoined units first.

#include <optional>
#include <string>

#include "wha/axioms.hpp"

namespace wha {

/// An algebra that need not be unital (input to the unit-adjoining builders).
/// dim may be 0.
struct RawAlgebra {
    std::size_t dim = 0;
    Tensor3 mult;
    std::optional<Vec> unit;

    RawAlgebra() = default;
    explicit RawAlgebra(std::size_t n) : dim(n), mult(n) {}

    static RawAlgebra from(const AlgebraStruct& A) {
        RawAlgebra r(A.dim);
        r.mult = A.mult;
        if (A.unital) r.unit = A.unit;
        return r;
    }
};

namespace detail {

inline Vec raw_mul(const RawAlgebra& A, const Vec& x, const Vec& y) {
    AlgebraStruct s(A.dim);
    s.mult = A.mult;
    return multiply(s, x, y);
}

}  // namespace detail

inline bool is_associative(const RawAlgebra& A) {
    const std::size_t n = A.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto e = [n](std::size_t t) { return Vec::basis(n, t); };
                if (detail::raw_mul(A, detail::raw_mul(A, e(i), e(j)), e(k)) != detail::raw_mul(A, e(i), detail::raw_mul(A, e(j), e(k))))
                    return false;
            }
    return true;
}

/// Every product of two basis vectors is again a basis vector (never 0).
inline bool has_semigroup_basis(const RawAlgebra& A) {
    const std::size_t n = A.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t ones = 0, others = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = A.mult(i, j, k);
                if (c.is_one()) ++ones;
                else if (!c.is_zero()) ++others;
            }
            if (ones != 1 || others != 0) return false;
        }
    return true;
}

struct BuildOptions {
    // The grouplike-basis builders need products of basis vectors to be basis vectors:
    // with a zero product a.b = 0 the weak counit identity fails on (a, 1, b).
    // Turning this off exists only to exhibit that failure.
    bool require_semigroup_basis = true;
};

namespace detail {

inline void require_associative(const RawAlgebra& A, const char* what) {
    if (!is_associative(A)) throw MathError("not-associative", std::string(what) + " is not associative");
}

inline void require_semigroup(const RawAlgebra& A, const BuildOptions& o, const char* what) {
    if (o.require_semigroup_basis && !has_semigroup_basis(A))
        throw MathError("not-semigroup-basis", std::string(what) + ": a product of basis vectors is not a basis vector");
}

// Copy a structure into a bigger basis at an offset (the first `off` slots are new).
inline void embed(const WeakStructure& B, WeakStructure& out, std::size_t off) {
    const std::size_t m = B.dim();
    for (std::size_t a = 0; a < m; ++a) {
        out.coalg.counit[off + a] = B.coalg.counit[a];
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                out.alg.mult(off + a, off + b, off + c) = B.alg.mult(a, b, c);
                out.coalg.comult(off + a, off + b, off + c) = B.coalg.comult(a, b, c);
            }
    }
}

inline Vec shifted(const Vec& v, std::size_t n, std::size_t off) {
    Vec out(n);
    for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
    return out;
}

// The vector `unit` becomes a two-sided unit for the listed basis slots.
inline void make_unit_for(WeakStructure& H, std::size_t unit_idx, std::size_t from, std::size_t to) {
    for (std::size_t b = from; b < to; ++b) {
        for (std::size_t k = 0; k < H.dim(); ++k) {
            H.alg.mult(unit_idx, b, k) = 0;
            H.alg.mult(b, unit_idx, k) = 0;
        }
        H.alg.mult(unit_idx, b, b) = 1;
        H.alg.mult(b, unit_idx, b) = 1;
    }
}

inline WeakStructure with_identity_antipode(WeakStructure H) {
    H.antipode = Mat::identity(H.dim());
    return H;
}

}  // namespace detail

/// Two successive units e and 1 adjoined to A. Basis (1, e, a_1, ..., a_n).
inline WeakStructure adjoin_two_units(const RawAlgebra& A, BuildOptions opt = {}) {
    detail::require_associative(A, "input algebra");
    detail::require_semigroup(A, opt, "input algebra");
    const std::size_t n = A.dim + 2;
    WeakStructure H(n);
    H.label = "adjoin_two_units(dim " + std::to_string(A.dim) + ")";
    for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t b = 0; b < A.dim; ++b)
            for (std::size_t c = 0; c < A.dim; ++c) H.alg.mult(a + 2, b + 2, c + 2) = A.mult(a, b, c);
    detail::make_unit_for(H, 1, 1, n);
    detail::make_unit_for(H, 0, 0, n);
    H.alg.unit = Vec::basis(n, 0);
    const Vec one = Vec::basis(n, 0), e = Vec::basis(n, 1);
    detail::add_outer(H.coalg.comult, 0, one - e, one - e);
    detail::add_outer(H.coalg.comult, 0, e, e);
    for (std::size_t a = 1; a < n; ++a) H.coalg.comult(a, a, a) = 1;
    H.coalg.counit[0] = 2;
    for (std::size_t a = 1; a < n; ++a) H.coalg.counit[a] = 1;
    return H;
}

/// A unital, e an idempotent basis vector other than the unit that is a unit for the
/// span of the remaining basis vectors. Same basis as A.
inline WeakStructure weak_from_idempotent(const AlgebraStruct& A, const Vec& e, BuildOptions opt = {}) {
    const std::size_t n = A.dim;
    detail::need(e.size(), n);
    if (!A.unital) throw MathError("not-unital", "algebra has no unit");
    std::optional<std::size_t> u, ei;
    for (std::size_t i = 0; i < n; ++i) {
        if (A.unit == Vec::basis(n, i)) u = i;
        if (e == Vec::basis(n, i)) ei = i;
    }
    if (!u) throw MathError("unit-not-basis-vector", "the unit must be one of the basis vectors");
    if (e == A.unit) throw MathError("not-in-complement", "e must differ from the unit");
    if (!ei) throw MathError("not-basis-element", "e must be one of the basis vectors");
    RawAlgebra raw = RawAlgebra::from(A);
    detail::require_associative(raw, "algebra");
    auto b = [n](std::size_t i) { return Vec::basis(n, i); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != *u && j != *u && !A.mult(i, j, *u).is_zero())
                throw MathError("not-subalgebra", "the complement of the unit is not closed under multiplication");
    if (multiply(A, e, e) != e) throw MathError("not-idempotent", "e.e != e");
    for (std::size_t i = 0; i < n; ++i) {
        if (i == *u) continue;
        if (multiply(A, e, b(i)) != b(i) || multiply(A, b(i), e) != b(i))
            throw MathError("not-relative-unit", "e is not a unit for the complement");
    }
    if (opt.require_semigroup_basis)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == *u || j == *u) continue;
                Vec p = multiply(A, b(i), b(j));
                bool basis = false;
                for (std::size_t k = 0; k < n; ++k) basis = basis || p == b(k);
                if (!basis) throw MathError("not-semigroup-basis", "a product in the complement is not a basis vector");
            }
    WeakStructure H(n);
    H.alg = A;
    H.label = "weak_from_idempotent";
    const Vec one = A.unit;
    detail::add_outer(H.coalg.comult, *u, one - e, one - e);
    detail::add_outer(H.coalg.comult, *u, e, e);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == *u) continue;
        H.coalg.comult(i, i, i) = 1;
        H.coalg.counit[i] = 1;
    }
    H.coalg.counit[*u] = 2;
    return H;
}

/// K x ... x K with e_1 = 1 and e_2..e_n orthogonal idempotents; Delta(1) split at e_k.
/// k is 1-based (2 <= k <= n). This is not an instance of weak_from_idempotent for n >= 3
/// (e_k is not a unit for the other idempotents); verification decides what it is.
inline WeakStructure orthogonal_idempotents(std::size_t n, std::size_t k) {
    if (n < 2 || k < 2 || k > n) throw InputError("orthogonal_idempotents needs 2 <= k <= n");
    WeakStructure H(n);
    H.label = "orthogonal_idempotents(" + std::to_string(n) + "," + std::to_string(k) + ")";
    H.alg.unit = Vec::basis(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        H.alg.mult(0, i, i) = 1;
        H.alg.mult(i, 0, i) = 1;
        H.alg.mult(i, i, i) = 1;
    }
    const Vec one = Vec::basis(n, 0), ek = Vec::basis(n, k - 1);
    detail::add_outer(H.coalg.comult, 0, one - ek, one - ek);
    detail::add_outer(H.coalg.comult, 0, ek, ek);
    for (std::size_t i = 1; i < n; ++i) {
        H.coalg.comult(i, i, i) = 1;
        H.coalg.counit[i] = 1;
    }
    H.coalg.counit[0] = 2;
    return H;
}

/// e_1..e_p with e_i e_j = e_max(i,j), followed by the basis of B2 (absorbed by every e_i).
inline WeakStructure chain_construction(std::size_t p, const RawAlgebra& B2, BuildOptions opt = {}) {
    if (p < 1) throw InputError("chain_construction needs p >= 1");
    detail::require_associative(B2, "B2");
    detail::require_semigroup(B2, opt, "B2");
    const std::size_t n = p + B2.dim;
    WeakStructure H(n);
    H.label = "chain_construction(" + std::to_string(p) + ", dim " + std::to_string(B2.dim) + ")";
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) H.alg.mult(i, j, std::max(i, j)) = 1;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t f = p; f < n; ++f) {
            H.alg.mult(i, f, f) = 1;
            H.alg.mult(f, i, f) = 1;
        }
    for (std::size_t a = 0; a < B2.dim; ++a)
        for (std::size_t b = 0; b < B2.dim; ++b)
            for (std::size_t c = 0; c < B2.dim; ++c) H.alg.mult(p + a, p + b, p + c) = B2.mult(a, b, c);
    H.alg.unit = Vec::basis(n, 0);
    auto e = [n](std::size_t i) { return Vec::basis(n, i); };
    // Delta(e_i) = sum_{t>=i} (e_t - e_{t+1}) (x) (e_t - e_{t+1}) + e_p (x) e_p
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t t = i; t + 1 < p; ++t) detail::add_outer(H.coalg.comult, i, e(t) - e(t + 1), e(t) - e(t + 1));
        detail::add_outer(H.coalg.comult, i, e(p - 1), e(p - 1));
        H.coalg.counit[i] = static_cast<long>(p - i);
    }
    for (std::size_t f = p; f < n; ++f) {
        H.coalg.comult(f, f, f) = 1;
        H.coalg.counit[f] = 1;
    }
    return H;
}

/// e_i e_j = e_max(i,j), telescoping Delta, S = id.
inline WeakStructure max_algebra_whopf(std::size_t n) {
    if (n < 2) throw InputError("max_algebra_whopf needs n >= 2");
    WeakStructure H = detail::with_identity_antipode(chain_construction(n, RawAlgebra(0)));
    H.label = "max_algebra_whopf(" + std::to_string(n) + ")";
    return H;
}

namespace detail {

inline WeakStructure adjoin_one_unit(const WeakStructure& B) {
    const std::size_t m = B.dim(), n = m + 1;
    WeakStructure H(n);
    embed(B, H, 1);
    make_unit_for(H, 0, 0, n);
    H.alg.unit = Vec::basis(n, 0);
    const Vec one = Vec::basis(n, 0), u = shifted(B.alg.unit, n, 1);
    add_outer(H.coalg.comult, 0, one - u, one - u);
    add_outer(H.coalg.comult, 0, u, u);
    H.coalg.counit[0] = 2;
    H.conductor = B.conductor;
    return H;
}

}  // namespace detail

/// New unit e_1 in front of a bialgebra B with unit u: Delta(e_1) = (e_1-u)(x)(e_1-u) + u(x)u, eps(e_1) = 2.
inline WeakStructure adjoin_unit_to_bialgebra(const WeakStructure& B) {
    if (!satisfies(B, Level::StrictBialgebra)) throw MathError("not-strict-bialgebra", "input is not a bialgebra");
    WeakStructure H = detail::adjoin_one_unit(B);
    H.label = "adjoin_unit_to_bialgebra(" + B.label + ")";
    return H;
}

/// As adjoin_unit_to_bialgebra, with S(e_1) = e_1 and S unchanged on B.
inline WeakStructure adjoin_unit_to_hopf(const WeakStructure& B) {
    if (!satisfies(B, Level::StrictHopf)) throw MathError("not-hopf", "input is not a Hopf algebra");
    WeakStructure H = detail::adjoin_one_unit(B);
    Mat s(H.dim(), H.dim());
    s(0, 0) = 1;
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (std::size_t j = 0; j < B.dim(); ++j) s(i + 1, j + 1) = (*B.antipode)(i, j);
    H.antipode = s;
    H.label = "adjoin_unit_to_hopf(" + B.label + ")";
    return H;
}

namespace detail {

enum class TwoUnitVariant { A, B };

inline WeakStructure two_unit_variant(const WeakStructure& B, TwoUnitVariant v, bool with_antipode) {
    if (!satisfies(B, Level::StrictBialgebra)) throw MathError("not-strict-bialgebra", "input is not a bialgebra");
    if (with_antipode && !satisfies(B, Level::StrictHopf)) throw MathError("not-hopf", "antipode requested but input is not Hopf");
    const std::size_t m = B.dim(), n = m + 2;
    WeakStructure H(n);
    embed(B, H, 2);
    make_unit_for(H, 1, 1, n);
    make_unit_for(H, 0, 0, n);
    H.alg.unit = Vec::basis(n, 0);
    H.conductor = B.conductor;
    const Vec one = Vec::basis(n, 0), e = Vec::basis(n, 1), u = shifted(B.alg.unit, n, 2);
    Tensor3& D = H.coalg.comult;
    if (v == TwoUnitVariant::A) {
        // Delta(1) = 1(x)(e-u) + u(x)(1-2e+2u), Delta(e) = e(x)(e-u) + u(x)(2u-e)
        add_outer(D, 0, one, e - u);
        add_outer(D, 0, u, one - Scalar(2) * e + Scalar(2) * u);
        add_outer(D, 1, e, e - u);
        add_outer(D, 1, u, Scalar(2) * u - e);
        H.coalg.counit[0] = 2;
        H.coalg.counit[1] = 2;
    } else {
        // Delta(1) = (1-e)(x)(1-e) + (e-u)(x)(e-u) + u(x)u, Delta(e) = (e-u)(x)(e-u) + u(x)u
        add_outer(D, 0, one - e, one - e);
        add_outer(D, 0, e - u, e - u);
        add_outer(D, 0, u, u);
        add_outer(D, 1, e - u, e - u);
        add_outer(D, 1, u, u);
        H.coalg.counit[0] = 3;
        H.coalg.counit[1] = 2;
    }
    if (with_antipode) {
        Mat s(n, n);
        s(0, 0) = 1;
        s(1, 1) = 1;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) s(i + 2, j + 2) = (*B.antipode)(i, j);
        H.antipode = s;
    }
    return H;
}

}  // namespace detail

/// Basis (1, e, B...).
inline WeakStructure two_unit_variant_a(const WeakStructure& B, bool with_antipode = false) {
    WeakStructure H = detail::two_unit_variant(B, detail::TwoUnitVariant::A, with_antipode);
    H.label = "two_unit_variant_a(" + B.label + ")";
    return H;
}

/// Basis (1, e, B...).
inline WeakStructure two_unit_variant_b(const WeakStructure& B, bool with_antipode = false) {
    WeakStructure H = detail::two_unit_variant(B, detail::TwoUnitVariant::B, with_antipode);
    H.label = "two_unit_variant_b(" + B.label + ")";
    return H;
}

/// Group algebra of Z/k, basis g^0..g^{k-1}, all grouplike, S(g) = g^{-1}.
inline WeakStructure group_bialgebra(std::size_t k) {
    if (k < 1) throw InputError("group_bialgebra needs k >= 1");
    WeakStructure H(k);
    H.label = "group_bialgebra(" + std::to_string(k) + ")";
    Mat s(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) H.alg.mult(a, b, (a + b) % k) = 1;
        H.coalg.comult(a, a, a) = 1;
        H.coalg.counit[a] = 1;
        s(a, (k - a) % k) = 1;
    }
    H.alg.unit = Vec::basis(k, 0);
    H.antipode = s;
    return H;
}

namespace detail {

// Taft Hopf algebra on words c^i x^j, slot j*n + i.
struct TaftWords {
    std::size_t n;
    std::size_t slot(std::size_t i, std::size_t j) const { return j * n + i; }
};

}  // namespace detail

/// The n^2-dimensional Taft Hopf algebra: c^n = 1, x^n = 0, x c = lambda c x, lambda = zeta_n.
/// Basis c^i x^j in the order (j, i): 1, c, ..., c^{n-1}, x, c x, ...
inline WeakStructure taft_hopf(std::size_t n) {
    if (n < 2) throw InputError("taft needs n >= 2");
    const detail::TaftWords w{n};
    const std::size_t d = n * n;
    WeakStructure H(d);
    H.label = "taft_hopf(" + std::to_string(n) + ")";
    H.conductor = static_cast<int>(n);
    const Scalar lambda = Scalar::zeta(static_cast<int>(n));
    // (c^i x^j)(c^k x^l) = lambda^{jk} c^{i+k} x^{j+l}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (j + l < n) H.alg.mult(w.slot(i, j), w.slot(k, l), w.slot((i + k) % n, j + l)) = lambda.pow(static_cast<long>((j * k) % n));
    H.alg.unit = Vec::basis(d, w.slot(0, 0));
    auto basis = [d](std::size_t s) { return Vec::basis(d, s); };
    const Vec e = basis(w.slot(0, 0)), c = basis(w.slot(1 % n, 0)), x = basis(w.slot(0, 1));
    // Delta on words by multiplicativity from Delta(c) = c(x)c, Delta(x) = c(x)x + x(x)e
    const Tensor2 dc = outer(c, c);
    const Tensor2 dx = outer(c, x) + outer(x, e);
    // S(c) = c^{-1}, S(x) = -c^{-1} x, S anti-multiplicative
    const Vec cinv = basis(w.slot(n - 1, 0));
    const Vec sx = -multiply(H.alg, cinv, x);
    Mat s(d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Tensor2 delta = outer(e, e);
            Vec sw = e;
            for (std::size_t t = 0; t < i; ++t) delta = multiply2(H.alg, delta, dc);
            for (std::size_t t = 0; t < j; ++t) delta = multiply2(H.alg, delta, dx);
            for (std::size_t t = 0; t < j; ++t) sw = multiply(H.alg, sw, sx);      // S(x)^j
            for (std::size_t t = 0; t < i; ++t) sw = multiply(H.alg, sw, cinv);    // then S(c)^i
            const std::size_t k = w.slot(i, j);
            for (std::size_t a = 0; a < d; ++a) {
                for (std::size_t b = 0; b < d; ++b) H.coalg.comult(k, a, b) = delta(a, b);
                s(k, a) = sw[a];
            }
            H.coalg.counit[k] = j == 0 ? 1 : 0;
        }
    H.antipode = s;
    return H;
}

/// Taft Hopf algebra with a new unit adjoined; basis (1, e, c, ..., x, c x, ...), dim n^2 + 1.
inline WeakStructure taft_weak_hopf(std::size_t n) {
    WeakStructure H = adjoin_unit_to_hopf(taft_hopf(n));
    H.label = "taft_weak_hopf(" + std::to_string(n) + ")";
    return H;
}

/// Sweedler's 4-dimensional Hopf algebra, basis (e, x, c, c x).
inline WeakStructure sweedler4() {
    WeakStructure H(4);
    H.label = "sweedler4";
    enum { E, X, C, CX };
    auto& m = H.alg.mult;
    for (std::size_t b = 0; b < 4; ++b) {
        m(E, b, b) = 1;
        m(b, E, b) = 1;
    }
    m(X, C, CX) = -1;  // x c = -c x
    m(C, X, CX) = 1;
    m(C, C, E) = 1;
    m(C, CX, X) = 1;   // c c x = x
    m(CX, C, X) = -1;  // c x c = -c c x = -x
    H.alg.unit = Vec::basis(4, E);
    auto& D = H.coalg.comult;
    D(E, E, E) = 1;
    D(C, C, C) = 1;
    D(X, C, X) = 1;    // c (x) x
    D(X, X, E) = 1;    // x (x) e
    D(CX, E, CX) = 1;  // e (x) c x
    D(CX, CX, C) = 1;  // c x (x) c
    H.coalg.counit = Vec{1, 0, 1, 0};
    Mat s(4, 4);
    s(E, E) = 1;
    s(C, C) = 1;
    s(X, CX) = -1;  // S(x) = -c x
    s(CX, X) = 1;   // S(c x) = S(x) S(c) = -c x c = x
    H.antipode = s;
    return H;
}

/// Sweedler's 4-dimensional Hopf algebra with a new unit; basis (1, e, x, c, c x).
inline WeakStructure sweedler5() {
    WeakStructure H(5);
    H.label = "sweedler5";
    enum { ONE, E, X, C, CX };
    auto& m = H.alg.mult;
    for (std::size_t b = 0; b < 5; ++b) {
        m(ONE, b, b) = 1;
        if (b != ONE) m(b, ONE, b) = 1;
    }
    for (std::size_t b = 1; b < 5; ++b) {
        m(E, b, b) = 1;
        if (b != E) m(b, E, b) = 1;
    }
    m(X, C, CX) = -1;
    m(C, X, CX) = 1;
    m(C, C, E) = 1;
    m(C, CX, X) = 1;
    m(CX, C, X) = -1;
    H.alg.unit = Vec::basis(5, ONE);
    auto& D = H.coalg.comult;
    // Delta(1) = (1-e)(x)(1-e) + e(x)e
    D(ONE, ONE, ONE) = 1;
    D(ONE, ONE, E) = -1;
    D(ONE, E, ONE) = -1;
    D(ONE, E, E) = 2;
    D(E, E, E) = 1;
    D(C, C, C) = 1;
    D(X, C, X) = 1;
    D(X, X, E) = 1;
    D(CX, E, CX) = 1;
    D(CX, CX, C) = 1;
    H.coalg.counit = Vec{2, 1, 0, 1, 0};
    Mat s(5, 5);
    s(ONE, ONE) = 1;
    s(E, E) = 1;
    s(C, C) = 1;
    s(X, CX) = -1;
    s(CX, X) = 1;
    H.antipode = s;
    return H;
}

}  // namespace wha
