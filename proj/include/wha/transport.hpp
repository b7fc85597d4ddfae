#pragma once

// Linear-group action on structures, witness checking, automorphisms (point, parametric,
// finite closure) and the stabilizer tangent dimension.
//
// Matrices are read in one of two conventions:
//   columns (default): g(e_j) = sum_i T(i,j) e_i
//   rows:              g(e_i) = sum_j T(i,j) e_j      (that is, G = T^T)
// Internally everything runs on the column matrix G.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wha/axioms.hpp"
#include "wha/poly.hpp"

namespace wha {

enum class Convention { Columns, Rows };

inline const char* convention_name(Convention c) { return c == Convention::Columns ? "columns" : "rows"; }

inline Convention parse_convention(const std::string& s) {
    if (s == "columns" || s == "cols") return Convention::Columns;
    if (s == "rows") return Convention::Rows;
    throw InputError("unknown convention '" + s + "' (columns|rows)");
}

struct BasisChange {
    Mat T;
    Mat Tinv;
    Convention convention = Convention::Columns;

    static BasisChange from(const Mat& T, Convention c = Convention::Columns) {
        if (!T.square()) throw DimensionMismatch("basis change must be square");
        return BasisChange{T, inverse(T), c};
    }
    static BasisChange identity(std::size_t n) { return from(Mat::identity(n)); }

    std::size_t dim() const { return T.rows(); }
    Mat G() const { return convention == Convention::Columns ? T : T.transpose(); }
    Mat Ginv() const { return convention == Convention::Columns ? Tinv : Tinv.transpose(); }
};

/// g.m = g^-1 m (g x g), g.Delta = (g^-1 x g^-1) Delta g, g.eps = eps g, g.S = g^-1 S g, unit g^-1(1).
/// transport(transport(H, h), g) == transport(H, G_h * G_g) in column matrices.
inline WeakStructure transport(const WeakStructure& H, const BasisChange& g) {
    const std::size_t n = H.dim();
    detail::need(g.dim(), n);
    const Mat G = g.G(), Gi = g.Ginv();
    WeakStructure out(n);
    out.label = H.label;
    out.conductor = H.conductor;
    out.alg.unital = H.alg.unital;

    // C'_{ab}^c = sum G_ia G_jb C_ij^k Gi_ck, staged
    Tensor3 X(n), Y(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i) {
            if (G(i, a).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!H.alg.mult(i, j, k).is_zero()) X(a, j, k) += G(i, a) * H.alg.mult(i, j, k);
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t j = 0; j < n; ++j) {
                if (G(j, b).is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (!X(a, j, k).is_zero()) Y(a, b, k) += G(j, b) * X(a, j, k);
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                if (Y(a, b, k).is_zero()) continue;
                for (std::size_t c = 0; c < n; ++c)
                    if (!Gi(c, k).is_zero()) out.alg.mult(a, b, c) += Y(a, b, k) * Gi(c, k);
            }

    // D'_c^{ab} = sum G_kc D_k^{ij} Gi_ai Gi_bj
    Tensor3 P(n), Q(n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) {
            if (G(k, c).is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!H.coalg.comult(k, i, j).is_zero()) P(c, i, j) += G(k, c) * H.coalg.comult(k, i, j);
        }
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (P(c, i, j).is_zero()) continue;
                for (std::size_t a = 0; a < n; ++a)
                    if (!Gi(a, i).is_zero()) Q(c, a, j) += Gi(a, i) * P(c, i, j);
            }
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t j = 0; j < n; ++j) {
                if (Q(c, a, j).is_zero()) continue;
                for (std::size_t b = 0; b < n; ++b)
                    if (!Gi(b, j).is_zero()) out.coalg.comult(c, a, b) += Gi(b, j) * Q(c, a, j);
            }

    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) out.coalg.counit[c] += G(k, c) * H.coalg.counit[k];
    if (H.alg.unital) out.alg.unit = Gi * H.alg.unit;
    if (H.antipode) {
        // column form S^T; (g.S)^T = Gi S^T G, then back to rows
        Mat s = Gi * H.antipode->transpose() * G;
        out.antipode = s.transpose();
    }
    return out;
}

// ---- witness equations

struct WitnessFailure {
    std::string family;              // comult | counit | mult | antipode
    std::vector<std::size_t> index;  // 0-based
    Scalar lhs, rhs;

    std::string describe() const {
        auto e = [](std::size_t i) { return "e" + std::to_string(i + 1); };
        std::string s;
        if (family == "comult")
            s = "Delta1(g(" + e(index[0]) + ")) vs (g(x)g)(Delta2(" + e(index[0]) + ")) at " + e(index[1]) + "(x)" + e(index[2]);
        else if (family == "counit")
            s = "eps1(g(" + e(index[0]) + ")) vs eps2(" + e(index[0]) + ")";
        else if (family == "mult")
            s = "g(" + e(index[0]) + ")g(" + e(index[1]) + ") vs g(" + e(index[0]) + e(index[1]) + ") at " + e(index[2]);
        else
            s = "S1(g(" + e(index[1]) + ")) vs g(S2(" + e(index[1]) + ")) at " + e(index[0]);
        return s + ": " + lhs.to_string() + " != " + rhs.to_string();
    }
};

struct WitnessResult {
    bool pass = true;
    std::optional<WitnessFailure> failure;
    std::size_t equations = 0;
};

/// g witnesses an isomorphism H2 -> H1 (g(m2(x,y)) = m1(gx,gy), etc.), equivalently
/// transport(H1, g) == H2. Checks comult, counit, mult, then antipode when both carry one.
inline WitnessResult is_morphism_witness(const WeakStructure& H1, const WeakStructure& H2, const BasisChange& g) {
    const std::size_t n = H1.dim();
    detail::need(H2.dim(), n);
    detail::need(g.dim(), n);
    const Mat G = g.G();
    WitnessResult r;
    auto check = [&](const char* fam, std::vector<std::size_t> idx, const Scalar& l, const Scalar& rr) {
        ++r.equations;
        if (r.pass && l != rr) {
            r.pass = false;
            r.failure = WitnessFailure{fam, std::move(idx), l, rr};
        }
        return r.pass;
    };
    for (std::size_t c = 0; c < n; ++c) {
        Tensor2 left(n), right(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (G(k, c).is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) left(i, j) += G(k, c) * H1.coalg.comult(k, i, j);
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& d = H2.coalg.comult(c, a, b);
                if (d.is_zero()) continue;
                for (std::size_t i = 0; i < n; ++i) {
                    if (G(i, a).is_zero()) continue;
                    for (std::size_t j = 0; j < n; ++j) right(i, j) += d * G(i, a) * G(j, b);
                }
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!check("comult", {c, i, j}, left(i, j), right(i, j))) return r;
    }
    for (std::size_t c = 0; c < n; ++c) {
        Scalar l;
        for (std::size_t k = 0; k < n; ++k) l += G(k, c) * H1.coalg.counit[k];
        if (!check("counit", {c}, l, H2.coalg.counit[c])) return r;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec left = multiply(H1.alg, G.column(a), G.column(b));
            Vec prod(n);
            for (std::size_t c = 0; c < n; ++c) prod[c] = H2.alg.mult(a, b, c);
            Vec right = G * prod;
            for (std::size_t k = 0; k < n; ++k)
                if (!check("mult", {a, b, k}, left[k], right[k])) return r;
        }
    if (H1.antipode && H2.antipode) {
        const Mat left = H1.antipode->transpose() * G, right = G * H2.antipode->transpose();
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < n; ++k)
                if (!check("antipode", {k, c}, left(k, c), right(k, c))) return r;
    }
    return r;
}

inline WitnessResult is_automorphism(const WeakStructure& H, const BasisChange& g) { return is_morphism_witness(H, H, g); }

// ---- parametric families

struct ParamMatrix {
    std::vector<std::string> params;
    std::vector<std::vector<Poly>> entries;  // rows
    std::vector<Poly> nonzero;               // declared nonvanishing constraints
    Convention convention = Convention::Columns;

    std::size_t size() const { return entries.size(); }

    static ParamMatrix parse(std::vector<std::string> params, const std::vector<std::vector<std::string>>& rows,
                             const std::vector<std::string>& nonzero = {}, Convention c = Convention::Columns) {
        ParamMatrix P;
        P.params = std::move(params);
        P.convention = c;
        for (const auto& row : rows) {
            if (row.size() != rows.size()) throw DimensionMismatch("parametric matrix must be square");
            std::vector<Poly> r;
            for (const auto& s : row) r.push_back(parse_poly(s, P.params));
            P.entries.push_back(std::move(r));
        }
        if (P.entries.empty()) throw InputError("empty parametric matrix");
        for (const auto& s : nonzero) P.nonzero.push_back(parse_poly(s, P.params));
        return P;
    }

    Mat at(const std::vector<Rational>& x) const {
        if (x.size() != params.size()) throw InputError("expected " + std::to_string(params.size()) + " parameter values");
        const std::size_t n = size();
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(entries[i][j].eval(x));
        return m;
    }

    Poly determinant() const {
        std::vector<std::size_t> cols(size());
        for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
        return det_minor(0, cols);
    }

    // Product of declared constraints and det(P): vanishes exactly off the admissible set.
    Poly obstruction() const {
        Poly q = determinant();
        for (const auto& c : nonzero) q = q * c;
        return q;
    }

    int degree_in(std::size_t v) const {
        int d = 0;
        for (const auto& row : entries)
            for (const auto& p : row) d = std::max(d, p.degree_in(v));
        return d;
    }

    std::optional<std::string> violated(const std::vector<Rational>& x) const {
        for (const auto& c : nonzero)
            if (sgn(c.eval(x)) == 0) return c.to_string(params) + " must be nonzero";
        if (sgn(determinant().eval(x)) == 0) return std::string("matrix is singular");
        return std::nullopt;
    }

private:
    Poly det_minor(std::size_t row, const std::vector<std::size_t>& cols) const {
        const std::size_t nv = params.size();
        if (cols.empty()) return Poly::constant(nv, 1);
        Poly acc(nv);
        for (std::size_t t = 0; t < cols.size(); ++t) {
            if (entries[row][cols[t]].is_zero()) continue;
            std::vector<std::size_t> rest;
            for (std::size_t u = 0; u < cols.size(); ++u)
                if (u != t) rest.push_back(cols[u]);
            Poly term = entries[row][cols[t]] * det_minor(row + 1, rest);
            acc = t % 2 == 0 ? acc + term : acc - term;
        }
        return acc;
    }
};

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

struct ParamPoint {
    std::vector<Rational> values;
    bool pass = false;
    std::optional<WitnessFailure> failure;
};

struct ParamResult {
    Verdict verdict = Verdict::Inconclusive;
    bool whole_family = false;  // grid was large enough for the identity argument
    std::vector<std::size_t> grid;
    std::vector<ParamPoint> points;
    std::size_t skipped = 0;
    std::string explanation;

    const ParamPoint* first_failure() const {
        for (const auto& p : points)
            if (!p.pass) return &p;
        return nullptr;
    }
};

/// k-th distinct rational sample: 1, 2, 3, -1, 1/2, -2, 4, 1/3, -3, 5, then 6, -4, 7, -5, ...
inline Rational sample_value(std::size_t k) {
    static const Rational head[] = {1, 2, 3, -1, Rational(1, 2), -2, 4, Rational(1, 3), -3, 5};
    if (k < 10) return head[k];
    const long t = static_cast<long>(k - 10);
    return t % 2 == 0 ? Rational(6 + t / 2) : Rational(-4 - t / 2);
}

namespace detail {

inline ParamPoint eval_point(const WeakStructure& H, const ParamMatrix& P, const std::vector<Rational>& x) {
    ParamPoint pt;
    pt.values = x;
    WitnessResult w = is_automorphism(H, BasisChange::from(P.at(x), P.convention));
    pt.pass = w.pass;
    pt.failure = w.failure;
    return pt;
}

}  // namespace detail

/// Every admissible member of the family is an automorphism?  Grid of size
/// max(min_samples, 2 deg_v(P) + deg_v(obstruction) + 1) per parameter: witness residuals
/// have degree <= 2 deg_v(P), and residual * obstruction vanishing on the grid forces the
/// residual to vanish identically.
inline ParamResult check_parametric_automorphism(const WeakStructure& H, const ParamMatrix& P, std::size_t min_samples = 1,
                                                 std::size_t max_points = 100000) {
    detail::need(P.size(), H.dim());
    ParamResult res;
    const Poly obst = P.obstruction();
    if (obst.is_zero()) {
        res.explanation = "no admissible parameter values (constraints vanish identically)";
        return res;
    }
    const std::size_t nv = P.params.size();
    std::size_t total = 1;
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t s = static_cast<std::size_t>(2 * P.degree_in(v) + obst.degree_in(v) + 1);
        res.grid.push_back(std::max(s, min_samples));
        total *= res.grid.back();
        if (total > max_points) throw BudgetExceeded("parametric grid has more than " + std::to_string(max_points) + " points");
    }
    std::vector<std::size_t> idx(nv, 0);
    for (std::size_t t = 0; t < total; ++t) {
        std::vector<Rational> x(nv);
        for (std::size_t v = 0; v < nv; ++v) x[v] = sample_value(idx[v]);
        if (sgn(obst.eval(x)) == 0) {
            ++res.skipped;
        } else {
            res.points.push_back(detail::eval_point(H, P, x));
            if (!res.points.back().pass) {
                res.verdict = Verdict::Fail;
                res.explanation = "automorphism fails at an admissible point";
                return res;
            }
        }
        for (std::size_t v = 0; v < nv; ++v) {
            if (++idx[v] < res.grid[v]) break;
            idx[v] = 0;
        }
    }
    if (res.points.empty()) {
        res.explanation = "every grid point violates a constraint";
        return res;
    }
    res.verdict = Verdict::Pass;
    res.whole_family = true;
    res.explanation = "all " + std::to_string(res.points.size()) + " admissible grid points pass; grid exceeds the residual degree bound";
    return res;
}

/// Test exactly the given points. A point violating a constraint is an input error.
inline ParamResult check_parametric_at(const WeakStructure& H, const ParamMatrix& P, const std::vector<std::vector<Rational>>& points) {
    detail::need(P.size(), H.dim());
    ParamResult res;
    for (const auto& x : points) {
        if (auto why = P.violated(x)) throw InputError("constraint-violation: " + *why);
        res.points.push_back(detail::eval_point(H, P, x));
    }
    res.verdict = Verdict::Pass;
    for (const auto& p : res.points)
        if (!p.pass) res.verdict = Verdict::Fail;
    res.explanation = res.verdict == Verdict::Pass ? "all listed points pass" : "automorphism fails at a listed point";
    return res;
}

// ---- finite groups

struct GroupClosure {
    std::vector<Mat> elements;  // BFS order from the identity
    std::size_t order() const { return elements.size(); }
};

inline GroupClosure group_closure(const std::vector<Mat>& gens, std::size_t bound = 10000) {
    if (gens.empty()) throw InputError("group_closure needs at least one generator");
    const std::size_t n = gens[0].rows();
    for (const auto& g : gens) {
        if (!g.square() || g.rows() != n) throw DimensionMismatch("generators must be square and of equal size");
        if (!invertible(g)) throw SingularMatrix();
    }
    GroupClosure out;
    std::set<std::string> seen;
    out.elements.push_back(Mat::identity(n));
    seen.insert(out.elements[0].key());
    for (std::size_t head = 0; head < out.elements.size(); ++head)
        for (const auto& g : gens) {
            Mat y = out.elements[head] * g;
            if (seen.insert(y.key()).second) {
                if (out.elements.size() >= bound)
                    throw BudgetExceeded("group closure exceeds " + std::to_string(bound) + " elements (possibly infinite)");
                out.elements.push_back(std::move(y));
            }
        }
    return out;
}

// ---- tangent space of the stabilizer

struct TangentResult {
    std::size_t n = 0;
    std::size_t tangent_dim = 0;
    std::size_t orbit_dim = 0;  // n^2 - tangent_dim
    std::vector<Mat> kernel_basis;  // column-convention directions X
};

/// Kernel of the witness equations linearized at the identity, in the n^2 entries of X
/// (g = 1 + tX): X is a derivation of m, a coderivation of Delta, and eps X = 0.
inline TangentResult stabilizer_tangent_dim(const WeakStructure& H) {
    const std::size_t n = H.dim();
    const std::size_t unknowns = n * n;
    auto col = [n](std::size_t r, std::size_t c) { return r * n + c; };  // X(r,c)
    std::vector<std::vector<Scalar>> rows;
    auto new_row = [&]() -> std::vector<Scalar>& { return rows.emplace_back(unknowns); };
    const auto& C = H.alg.mult;
    const auto& D = H.coalg.comult;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                auto& row = new_row();
                for (std::size_t r = 0; r < n; ++r) {
                    row[col(r, a)] += C(r, b, k);
                    row[col(r, b)] += C(a, r, k);
                    row[col(k, r)] -= C(a, b, r);
                }
            }
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto& row = new_row();
                for (std::size_t k = 0; k < n; ++k) {
                    row[col(k, c)] += D(k, i, j);
                    row[col(i, k)] -= D(c, k, j);
                    row[col(j, k)] -= D(c, i, k);
                }
            }
    for (std::size_t c = 0; c < n; ++c) {
        auto& row = new_row();
        for (std::size_t k = 0; k < n; ++k) row[col(k, c)] += H.coalg.counit[k];
    }
    // drop zero rows before reducing
    std::vector<std::vector<Scalar>> nz;
    for (auto& r : rows) {
        bool any = false;
        for (const auto& x : r) any = any || !x.is_zero();
        if (any) nz.push_back(std::move(r));
    }
    Mat M(std::max<std::size_t>(nz.size(), 1), unknowns);
    for (std::size_t i = 0; i < nz.size(); ++i)
        for (std::size_t j = 0; j < unknowns; ++j) M(i, j) = nz[i][j];
    std::vector<std::size_t> pivots;
    const std::size_t rk = detail::row_reduce(M, &pivots);
    TangentResult t;
    t.n = n;
    t.tangent_dim = unknowns - rk;
    t.orbit_dim = rk;
    // kernel basis from the reduced echelon form (row_reduce leaves RREF)
    std::vector<char> is_pivot(unknowns, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    for (std::size_t f = 0; f < unknowns; ++f) {
        if (is_pivot[f]) continue;
        Mat X(n, n);
        X(f / n, f % n) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) X(pivots[i] / n, pivots[i] % n) = -M(i, f);
        t.kernel_basis.push_back(X);
    }
    return t;
}

}  // namespace wha
