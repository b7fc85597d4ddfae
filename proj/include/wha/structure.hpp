#pragma once

// Structure constants of a finite-dimensional weak bialgebra candidate and the
// elementary maps m, Delta, eps, S evaluated on coordinate vectors.

#include <optional>
#include <string>
#include <vector>

#include "wha/linalg.hpp"
#include "wha/roots.hpp"

namespace wha {

struct AlgebraStruct {
    std::size_t dim = 0;
    Tensor3 mult;  // mult(i,j,k) = C_{i,j}^k
    Vec unit;
    bool unital = true;

    AlgebraStruct() = default;
    explicit AlgebraStruct(std::size_t n) : dim(n), mult(n), unit(n) {}
};

struct CoalgebraStruct {
    std::size_t dim = 0;
    Tensor3 comult;  // comult(k,i,j) = D_k^{i,j}
    Vec counit;      // f_k

    CoalgebraStruct() = default;
    explicit CoalgebraStruct(std::size_t n) : dim(n), comult(n), counit(n) {}
};

struct WeakStructure {
    AlgebraStruct alg;
    CoalgebraStruct coalg;
    std::optional<Mat> antipode;  // antipode(i,j) = s_{i,j}, S(e_i) = sum_j s_{i,j} e_j
    std::string label;
    int conductor = 1;

    WeakStructure() = default;
    explicit WeakStructure(std::size_t n) : alg(n), coalg(n) {}

    std::size_t dim() const { return alg.dim; }

    /// Shape and field-of-definition checks. Throws DimensionMismatch / InputError.
    void validate() const {
        const std::size_t n = alg.dim;
        if (n == 0) throw InputError("dimension must be positive");
        if (alg.mult.dim() != n || alg.unit.size() != n) throw DimensionMismatch("algebra tensors do not match dim");
        if (coalg.dim != n || coalg.comult.dim() != n || coalg.counit.size() != n)
            throw DimensionMismatch("coalgebra tensors do not match dim");
        if (antipode && (antipode->rows() != n || antipode->cols() != n))
            throw DimensionMismatch("antipode is not n x n");
        if (conductor < 1) throw InputError("conductor must be positive");
        auto ok = [&](const Scalar& s) { return s.conductor() == 1 || s.conductor() == conductor; };
        for (std::size_t a = 0; a < n; ++a) {
            if (!ok(alg.unit[a]) || !ok(coalg.counit[a])) throw InputError("scalar outside Q(zeta_" + std::to_string(conductor) + ")");
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (!ok(alg.mult(a, b, c)) || !ok(coalg.comult(a, b, c)))
                        throw InputError("scalar outside Q(zeta_" + std::to_string(conductor) + ")");
        }
    }

    friend bool operator==(const WeakStructure& a, const WeakStructure& b) {
        return a.alg.dim == b.alg.dim && a.alg.mult == b.alg.mult && a.alg.unit == b.alg.unit &&
               a.coalg.comult == b.coalg.comult && a.coalg.counit == b.coalg.counit && a.antipode == b.antipode;
    }
};

/// Linear endomorphism; matrix(r,c) is the coefficient of e_r in phi(e_c).
struct Endo {
    Mat matrix;

    static Endo identity(std::size_t n) { return {Mat::identity(n)}; }
    static Endo zero(std::size_t n) { return {Mat(n, n)}; }
    Vec operator()(const Vec& x) const { return matrix * x; }
    friend bool operator==(const Endo& a, const Endo& b) { return a.matrix == b.matrix; }
};

namespace detail {
inline void need(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionMismatch("dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

// D(k, ., .) += w * a (x) b
inline void add_outer(Tensor3& D, std::size_t k, const Vec& a, const Vec& b, const Scalar& w = Scalar(1)) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) D(k, i, j) += w * a[i] * b[j];
    }
}
}  // namespace detail

// ---- algebra side

inline Vec multiply(const AlgebraStruct& A, const Vec& x, const Vec& y) {
    detail::need(x.size(), A.dim);
    detail::need(y.size(), A.dim);
    Vec out(A.dim);
    for (std::size_t i = 0; i < A.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < A.dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < A.dim; ++k) {
                const Scalar& c = A.mult(i, j, k);
                if (!c.is_zero()) out[k] += xy * c;
            }
        }
    }
    return out;
}

inline Vec multiply(const WeakStructure& H, const Vec& x, const Vec& y) { return multiply(H.alg, x, y); }

/// Product in the tensor-square algebra: (a (x) b) . (c (x) d) = ac (x) bd.
// Contracted one tensor slot at a time, O(n^4).
inline Tensor2 multiply2(const AlgebraStruct& A, const Tensor2& x, const Tensor2& y) {
    const std::size_t n = A.dim;
    detail::need(x.dim(), n);
    detail::need(y.dim(), n);
    // Z[a][c][r] = sum_{b,d} x(a,b) y(c,d) C(b,d,r)
    std::vector<Scalar> W(n * n * n), Z(n * n * n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
            if (y(c, d).is_zero()) continue;
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t r = 0; r < n; ++r)
                    if (!A.mult(b, d, r).is_zero()) W[(c * n + b) * n + r] += y(c, d) * A.mult(b, d, r);
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (x(a, b).is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t r = 0; r < n; ++r) {
                    const Scalar& w = W[(c * n + b) * n + r];
                    if (!w.is_zero()) Z[(a * n + c) * n + r] += x(a, b) * w;
                }
        }
    Tensor2 out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t s = 0; s < n; ++s) {
                const Scalar& m = A.mult(a, c, s);
                if (m.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r) {
                    const Scalar& z = Z[(a * n + c) * n + r];
                    if (!z.is_zero()) out(s, r) += m * z;
                }
            }
    return out;
}

/// Product in the tensor-cube algebra.
// Same staging as multiply2, last slot first; O(n^6) with an n^5 intermediate.
inline Tensor3 multiply3(const AlgebraStruct& A, const Tensor3& x, const Tensor3& y) {
    const std::size_t n = A.dim;
    const std::size_t n2 = n * n;
    // W1[p,q,c,k] = sum_t y(p,q,t) C(c,t,k)
    std::vector<Scalar> W1(n2 * n2);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t t = 0; t < n; ++t) {
                if (y(p, q, t).is_zero()) continue;
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t k = 0; k < n; ++k)
                        if (!A.mult(c, t, k).is_zero()) W1[((p * n + q) * n + c) * n + k] += y(p, q, t) * A.mult(c, t, k);
            }
    // Z1[a,b,p,q,k] = sum_c x(a,b,c) W1[p,q,c,k]
    std::vector<Scalar> Z1(n2 * n2 * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& xv = x(a, b, c);
                if (xv.is_zero()) continue;
                for (std::size_t pq = 0; pq < n2; ++pq)
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& w = W1[(pq * n + c) * n + k];
                        if (!w.is_zero()) Z1[((a * n + b) * n2 + pq) * n + k] += xv * w;
                    }
            }
    // Z2[a,p,r,k] = sum_{b,q} C(b,q,r) Z1[a,b,p,q,k]
    std::vector<Scalar> Z2(n2 * n2);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) {
                const Scalar& m = A.mult(b, q, r);
                if (m.is_zero()) continue;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t k = 0; k < n; ++k) {
                            const Scalar& z = Z1[((a * n + b) * n2 + p * n + q) * n + k];
                            if (!z.is_zero()) Z2[((a * n + p) * n + r) * n + k] += m * z;
                        }
            }
    Tensor3 out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t s = 0; s < n; ++s) {
                const Scalar& m = A.mult(a, p, s);
                if (m.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& z = Z2[((a * n + p) * n + r) * n + k];
                        if (!z.is_zero()) out(s, r, k) += m * z;
                    }
            }
    return out;
}

/// Left multiplication L_a as a matrix: (L_a)(r,c) = C_{a,c}^r.
inline Mat left_multiplication(const AlgebraStruct& A, std::size_t a) {
    Mat L(A.dim, A.dim);
    for (std::size_t r = 0; r < A.dim; ++r)
        for (std::size_t c = 0; c < A.dim; ++c) L(r, c) = A.mult(a, c, r);
    return L;
}

/// Rank of the trace form (a,b) -> tr(L_a L_b).
inline std::size_t trace_bilinear_rank(const AlgebraStruct& A) {
    std::vector<Mat> L;
    for (std::size_t a = 0; a < A.dim; ++a) L.push_back(left_multiplication(A, a));
    Mat gram(A.dim, A.dim);
    for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t b = 0; b < A.dim; ++b) gram(a, b) = (L[a] * L[b]).trace();
    return rank(gram);
}

// ---- coalgebra side

inline Tensor2 comultiply(const CoalgebraStruct& C, const Vec& x) {
    detail::need(x.size(), C.dim);
    const std::size_t n = C.dim;
    Tensor2 out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (x[k].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& d = C.comult(k, i, j);
                if (!d.is_zero()) out(i, j) += x[k] * d;
            }
    }
    return out;
}

inline Tensor2 comultiply(const WeakStructure& H, const Vec& x) { return comultiply(H.coalg, x); }

inline Scalar counit(const CoalgebraStruct& C, const Vec& x) {
    detail::need(x.size(), C.dim);
    Scalar s;
    for (std::size_t k = 0; k < C.dim; ++k)
        if (!x[k].is_zero()) s += x[k] * C.counit[k];
    return s;
}

inline Scalar counit(const WeakStructure& H, const Vec& x) { return counit(H.coalg, x); }

/// (Delta (x) id) t
inline Tensor3 comultiply_left(const CoalgebraStruct& C, const Tensor2& t) {
    const std::size_t n = C.dim;
    Tensor3 out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (t(a, b).is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Scalar& d = C.comult(a, i, j);
                    if (!d.is_zero()) out(i, j, b) += t(a, b) * d;
                }
        }
    return out;
}

/// (id (x) Delta) t
inline Tensor3 comultiply_right(const CoalgebraStruct& C, const Tensor2& t) {
    const std::size_t n = C.dim;
    Tensor3 out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (t(a, b).is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Scalar& d = C.comult(b, i, j);
                    if (!d.is_zero()) out(a, i, j) += t(a, b) * d;
                }
        }
    return out;
}

// ---- antipode and convolution

/// S as an Endo (column convention), from the stored s_{i,j}.
inline Endo antipode_endo(const WeakStructure& H) {
    if (!H.antipode) throw InputError("structure has no antipode");
    return {H.antipode->transpose()};
}

inline Vec apply_antipode(const WeakStructure& H, const Vec& x) {
    detail::need(x.size(), H.dim());
    if (!H.antipode) throw InputError("structure has no antipode");
    const Mat& s = *H.antipode;
    Vec out(H.dim());
    for (std::size_t i = 0; i < H.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < H.dim(); ++j)
            if (!s(i, j).is_zero()) out[j] += x[i] * s(i, j);
    }
    return out;
}

/// m o (phi (x) psi) o Delta
inline Endo convolve(const WeakStructure& H, const Endo& phi, const Endo& psi) {
    const std::size_t n = H.dim();
    if (phi.matrix.rows() != n || psi.matrix.rows() != n || !phi.matrix.square() || !psi.matrix.square())
        throw DimensionMismatch("convolution operands must be n x n");
    Mat out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        Vec acc(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& d = H.coalg.comult(c, i, j);
                if (d.is_zero()) continue;
                acc += d * multiply(H.alg, phi.matrix.column(i), psi.matrix.column(j));
            }
        for (std::size_t r = 0; r < n; ++r) out(r, c) = acc[r];
    }
    return {out};
}

// ---- grouplikes

struct GrouplikeResult {
    std::vector<Vec> elements;  // canonical order
    std::vector<Scalar> counits;
};

namespace detail {

inline bool vec_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return canonical_less(a[i], b[i]);
    }
    return false;
}

inline bool is_grouplike(const CoalgebraStruct& C, const Vec& x) {
    return !x.is_zero() && comultiply(C, x) == outer(x, x);
}

inline GrouplikeResult finish_grouplikes(const CoalgebraStruct& C, std::vector<Vec> found) {
    std::sort(found.begin(), found.end(), vec_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    GrouplikeResult r;
    for (auto& x : found) {
        r.counits.push_back(counit(C, x));
        r.elements.push_back(std::move(x));
    }
    return r;
}

}  // namespace detail

/// All grouplikes (nonzero x with Delta(x) = x (x) x).
///
/// Coordinates: Delta(x) = x (x) x says x_i x = L_i x with (L_i)(j,k) = D_k^{i,j},
/// so x_i is an eigenvalue of L_i. Grouplikes are linearly independent, hence finitely
/// many, and each coordinate is a root of charpoly(L_i). When every charpoly is rational
/// the enumeration is complete over the field of the coefficients; with an irrational
/// charpoly the method is unavailable and a grid must be supplied.
inline GrouplikeResult grouplikes(const CoalgebraStruct& C, const std::vector<Scalar>* grid = nullptr) {
    const std::size_t n = C.dim;
    std::vector<std::vector<Scalar>> choices(n);
    if (grid) {
        for (auto& ch : choices) ch = *grid;
    } else {
        if (n > 3) throw InputError("grouplikes: dim > 3 needs a candidate grid");
        for (std::size_t i = 0; i < n; ++i) {
            Mat L(n, n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) L(j, k) = C.comult(k, i, j);
            std::vector<Scalar> cp = characteristic_polynomial(L);
            for (const auto& c : cp)
                if (!c.is_rational()) throw MathError("unavailable", "grouplike solver needs rational characteristic polynomials");
            for (const auto& r : rational_roots(cp)) choices[i].push_back(Scalar(r));
        }
    }
    std::vector<Vec> found;
    Vec x(n);
    std::vector<std::size_t> idx(n, 0);
    for (const auto& ch : choices)
        if (ch.empty()) return {};
    while (true) {
        for (std::size_t i = 0; i < n; ++i) x[i] = choices[i][idx[i]];
        if (detail::is_grouplike(C, x)) found.push_back(x);
        std::size_t p = n;
        while (p > 0) {
            --p;
            if (++idx[p] < choices[p].size()) break;
            idx[p] = 0;
            if (p == 0) return detail::finish_grouplikes(C, std::move(found));
        }
        if (n == 0) break;
    }
    return detail::finish_grouplikes(C, std::move(found));
}

inline GrouplikeResult grouplikes(const WeakStructure& H, const std::vector<Scalar>* grid = nullptr) {
    return grouplikes(H.coalg, grid);
}

}  // namespace wha
