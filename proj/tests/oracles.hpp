#pragma once

// Independent reference computations for the tests. Nothing here calls the library's
// axiom, transport, fingerprint or tangent code: structures are re-read into sparse
// tables and every identity is evaluated from its definition on sparse tensors.
// Scalars (exact field arithmetic) are shared; they are tested on their own.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wha/constructions.hpp"

namespace oracle {

using wha::Rational;
using wha::Scalar;
using Key = std::vector<std::size_t>;
using T = std::map<Key, Scalar>;  // sparse element of V^{(x)k}

inline void add(T& t, const Key& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
}

inline T plus(T a, const T& b, const Scalar& w = Scalar(1)) {
    for (const auto& [k, v] : b) add(a, k, w * v);
    return a;
}

inline bool same(const T& a, const T& b) { return plus(a, b, Scalar(-1)).empty(); }

struct Table {
    std::size_t n = 0;
    std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> mul;  // mul[a][b] = {(c, C)}
    std::vector<std::vector<std::pair<Key, Scalar>>> comul;                   // comul[k] = {({i,j}, D)}
    std::vector<Scalar> eps;
    std::vector<Scalar> unit;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> anti;  // anti[i] = {(j, s_ij)}
    bool has_antipode = false;
};

inline Table read(const wha::WeakStructure& H) {
    Table t;
    const std::size_t n = H.dim();
    t.n = n;
    t.mul.assign(n, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(n));
    t.comul.assign(n, {});
    t.anti.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
        t.eps.push_back(H.coalg.counit[a]);
        t.unit.push_back(H.alg.unit[a]);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (!H.alg.mult(a, b, c).is_zero()) t.mul[a][b].push_back({c, H.alg.mult(a, b, c)});
                if (!H.coalg.comult(a, b, c).is_zero()) t.comul[a].push_back({{b, c}, H.coalg.comult(a, b, c)});
            }
    }
    if (H.antipode) {
        t.has_antipode = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(*H.antipode)(i, j).is_zero()) t.anti[i].push_back({j, (*H.antipode)(i, j)});
    }
    return t;
}

inline T basis(std::initializer_list<std::size_t> k) { return T{{Key(k), Scalar(1)}}; }

inline T unit1(const Table& t) {
    T u;
    for (std::size_t i = 0; i < t.n; ++i) add(u, {i}, t.unit[i]);
    return u;
}

// componentwise product in V^{(x)k}
inline T mul(const Table& t, const T& x, const T& y) {
    T out;
    for (const auto& [kx, vx] : x)
        for (const auto& [ky, vy] : y) {
            std::vector<std::pair<Key, Scalar>> acc{{{}, vx * vy}};
            for (std::size_t s = 0; s < kx.size(); ++s) {
                std::vector<std::pair<Key, Scalar>> next;
                for (const auto& [k, v] : acc)
                    for (const auto& [c, w] : t.mul[kx[s]][ky[s]]) {
                        Key k2 = k;
                        k2.push_back(c);
                        next.push_back({k2, v * w});
                    }
                acc = std::move(next);
            }
            for (const auto& [k, v] : acc) add(out, k, v);
        }
    return out;
}

// contract slots (s, s+1) with the multiplication
inline T mul_slots(const Table& t, const T& x, std::size_t s) {
    T out;
    for (const auto& [k, v] : x)
        for (const auto& [c, w] : t.mul[k[s]][k[s + 1]]) {
            Key k2(k.begin(), k.begin() + static_cast<long>(s));
            k2.push_back(c);
            k2.insert(k2.end(), k.begin() + static_cast<long>(s) + 2, k.end());
            add(out, k2, v * w);
        }
    return out;
}

inline T comul_slot(const Table& t, const T& x, std::size_t s) {
    T out;
    for (const auto& [k, v] : x)
        for (const auto& [ij, w] : t.comul[k[s]]) {
            Key k2(k.begin(), k.begin() + static_cast<long>(s));
            k2.push_back(ij[0]);
            k2.push_back(ij[1]);
            k2.insert(k2.end(), k.begin() + static_cast<long>(s) + 1, k.end());
            add(out, k2, v * w);
        }
    return out;
}

inline T eps_slot(const Table& t, const T& x, std::size_t s) {
    T out;
    for (const auto& [k, v] : x) {
        Key k2 = k;
        k2.erase(k2.begin() + static_cast<long>(s));
        add(out, k2, v * t.eps[k[s]]);
    }
    return out;
}

inline T anti_slot(const Table& t, const T& x, std::size_t s) {
    T out;
    for (const auto& [k, v] : x)
        for (const auto& [j, w] : t.anti[k[s]]) {
            Key k2 = k;
            k2[s] = j;
            add(out, k2, v * w);
        }
    return out;
}

inline T swap_slots(const T& x, std::size_t a, std::size_t b) {
    T out;
    for (const auto& [k, v] : x) {
        Key k2 = k;
        std::swap(k2[a], k2[b]);
        add(out, k2, v);
    }
    return out;
}

inline T tensor(const T& x, const T& y) {
    T out;
    for (const auto& [kx, vx] : x)
        for (const auto& [ky, vy] : y) {
            Key k = kx;
            k.insert(k.end(), ky.begin(), ky.end());
            add(out, k, vx * vy);
        }
    return out;
}

inline Scalar scalar_of(const T& x) {
    auto it = x.find(Key{});
    return it == x.end() ? Scalar(0) : it->second;
}

/// Pass/fail of one named axiom, evaluated from its definition. Names as in the library.
inline bool axiom(const Table& t, const std::string& name) {
    const std::size_t n = t.n;
    const T one = unit1(t);
    const T d1 = comul_slot(t, one, 0);
    auto each1 = [&](auto f) {
        for (std::size_t i = 0; i < n; ++i)
            if (!f(i)) return false;
        return true;
    };
    auto each2 = [&](auto f) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!f(i, j)) return false;
        return true;
    };
    auto each3 = [&](auto f) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!f(i, j, k)) return false;
        return true;
    };
    if (name == "ASSOC")
        return each3([&](std::size_t i, std::size_t j, std::size_t k) {
            return same(mul(t, mul(t, basis({i}), basis({j})), basis({k})), mul(t, basis({i}), mul(t, basis({j}), basis({k}))));
        });
    if (name == "UNIT")
        return each1([&](std::size_t i) { return same(mul(t, one, basis({i})), basis({i})) && same(mul(t, basis({i}), one), basis({i})); });
    if (name == "COASSOC")
        return each1([&](std::size_t i) {
            T d = comul_slot(t, basis({i}), 0);
            return same(comul_slot(t, d, 0), comul_slot(t, d, 1));
        });
    if (name == "COUNIT")
        return each1([&](std::size_t i) {
            T d = comul_slot(t, basis({i}), 0);
            return same(eps_slot(t, d, 0), basis({i})) && same(eps_slot(t, d, 1), basis({i}));
        });
    if (name == "COMPAT")
        return each2([&](std::size_t i, std::size_t j) {
            return same(comul_slot(t, mul(t, basis({i}), basis({j})), 0), mul(t, comul_slot(t, basis({i}), 0), comul_slot(t, basis({j}), 0)));
        });
    if (name == "WEAK_UNIT_A" || name == "WEAK_UNIT_B") {
        const T lhs = comul_slot(t, d1, 0);
        const T a = tensor(d1, one), b = tensor(one, d1);
        return same(lhs, name == "WEAK_UNIT_A" ? mul(t, a, b) : mul(t, b, a));
    }
    if (name == "WEAK_COUNIT_A" || name == "WEAK_COUNIT_B") {
        const bool A = name == "WEAK_COUNIT_A";
        return each3([&](std::size_t i, std::size_t j, std::size_t k) {
            const Scalar lhs = scalar_of(eps_slot(t, mul(t, mul(t, basis({i}), basis({j})), basis({k})), 0));
            // x (x) Delta(y) (x) z, optionally with the legs of Delta(y) swapped, then eps(..)eps(..)
            T w = tensor(tensor(basis({i}), comul_slot(t, basis({j}), 0)), basis({k}));
            if (!A) w = swap_slots(w, 1, 2);
            w = mul_slots(t, mul_slots(t, w, 2), 0);
            return lhs == scalar_of(eps_slot(t, eps_slot(t, w, 1), 0));
        });
    }
    if (name == "ANTIPODE_1" || name == "ANTIPODE_2") {
        if (!t.has_antipode) return false;
        const bool first = name == "ANTIPODE_1";
        return each1([&](std::size_t i) {
            T d = comul_slot(t, basis({i}), 0);
            d = anti_slot(t, d, first ? 1 : 0);
            const T lhs = mul_slots(t, d, 0);
            T rhs;
            // literally (eps (x) id)(Delta(1) (x (x) 1)) and (id (x) eps)((1 (x) x) Delta(1)),
            // products taken in V (x) V; no unit law is assumed
            if (first) rhs = eps_slot(t, mul(t, d1, tensor(basis({i}), one)), 0);
            else rhs = eps_slot(t, mul(t, tensor(one, basis({i})), d1), 1);
            return same(lhs, rhs);
        });
    }
    if (name == "ANTIPODE_3") {
        if (!t.has_antipode) return false;
        return each1([&](std::size_t i) {
            T d = comul_slot(t, comul_slot(t, basis({i}), 0), 0);
            d = anti_slot(t, anti_slot(t, d, 0), 2);
            return same(mul_slots(t, mul_slots(t, d, 0), 0), anti_slot(t, basis({i}), 0));
        });
    }
    if (name == "STRICT_DELTA_UNIT") return same(d1, tensor(one, one));
    if (name == "STRICT_EPS_MULT")
        return each2([&](std::size_t i, std::size_t j) {
            return scalar_of(eps_slot(t, mul(t, basis({i}), basis({j})), 0)) == t.eps[i] * t.eps[j];
        });
    throw std::logic_error("unknown axiom " + name);
}

inline bool axiom(const wha::WeakStructure& H, const std::string& name) { return axiom(read(H), name); }

// ---- dense helpers with their own elimination

using Dense = std::vector<std::vector<Scalar>>;

inline std::size_t rank(Dense m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Scalar inv = Scalar(1) / m[r][c];
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Scalar f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Determinant by Laplace expansion; fine for n <= 7.
inline Scalar det(const Dense& m) {
    const std::size_t n = m.size();
    if (n == 0) return Scalar(1);
    if (n == 1) return m[0][0];
    Scalar acc;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        Dense minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Scalar> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const Scalar term = m[0][c] * det(minor);
        acc = c % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

inline Dense dense(const wha::Mat& m) {
    Dense d(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
    return d;
}

/// Dimension of {X : X derivation of m, coderivation of Delta, eps X = 0}, built by applying
/// the linearized witness equations to each elementary direction E_rc.
inline std::size_t tangent_dim(const wha::WeakStructure& H) {
    const Table t = read(H);
    const std::size_t n = t.n;
    Dense cols;  // one column per direction, as a row here; rank is the same
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            // X e_c = e_r, X e_other = 0
            auto X = [&](const T& x, std::size_t s) {
                T out;
                for (const auto& [k, v] : x)
                    if (k[s] == c) {
                        Key k2 = k;
                        k2[s] = r;
                        add(out, k2, v);
                    }
                return out;
            };
            std::vector<Scalar> eq;
            auto push = [&](const T& x, std::size_t arity) {
                // flatten in a fixed order over all keys of this arity
                std::size_t total = 1;
                for (std::size_t a = 0; a < arity; ++a) total *= n;
                for (std::size_t f = 0; f < total; ++f) {
                    Key k(arity);
                    std::size_t g = f;
                    for (std::size_t a = arity; a-- > 0;) {
                        k[a] = g % n;
                        g /= n;
                    }
                    auto it = x.find(k);
                    eq.push_back(it == x.end() ? Scalar(0) : it->second);
                }
            };
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const T ab = mul(t, basis({a}), basis({b}));
                    T lhs = X(ab, 0);
                    T rhs = plus(mul(t, X(basis({a}), 0), basis({b})), mul(t, basis({a}), X(basis({b}), 0)));
                    push(plus(lhs, rhs, Scalar(-1)), 1);
                }
            for (std::size_t a = 0; a < n; ++a) {
                const T d = comul_slot(t, basis({a}), 0);
                T lhs = comul_slot(t, X(basis({a}), 0), 0);
                T rhs = plus(X(d, 0), X(d, 1));
                push(plus(lhs, rhs, Scalar(-1)), 2);
            }
            for (std::size_t a = 0; a < n; ++a) push(eps_slot(t, X(basis({a}), 0), 0), 0);
            cols.push_back(eq);
        }
    return n * n - rank(cols);
}

/// Fingerprint parts that have a one-line definition.
struct SimpleInvariants {
    Scalar eps_unit, tr_md, tr_md2, tr_mtd;
    bool commutative = false, cocommutative = false;
    std::size_t trace_form_rank = 0, delta_unit_rank = 0;
};

inline SimpleInvariants invariants(const wha::WeakStructure& H) {
    const Table t = read(H);
    const std::size_t n = t.n;
    SimpleInvariants s;
    s.eps_unit = scalar_of(eps_slot(t, unit1(t), 0));
    Dense md(n, std::vector<Scalar>(n)), mtd(n, std::vector<Scalar>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const T d = comul_slot(t, basis({k}), 0);
        for (const auto& [key, v] : mul_slots(t, d, 0)) md[key[0]][k] += v;
        for (const auto& [key, v] : mul_slots(t, swap_slots(d, 0, 1), 0)) mtd[key[0]][k] += v;
    }
    for (std::size_t i = 0; i < n; ++i) {
        s.tr_md += md[i][i];
        s.tr_mtd += mtd[i][i];
        for (std::size_t j = 0; j < n; ++j) s.tr_md2 += md[i][j] * md[j][i];
    }
    s.commutative = true;
    s.cocommutative = true;
    for (std::size_t i = 0; i < n; ++i) {
        const T d = comul_slot(t, basis({i}), 0);
        s.cocommutative = s.cocommutative && same(d, swap_slots(d, 0, 1));
        for (std::size_t j = 0; j < n; ++j)
            s.commutative = s.commutative && same(mul(t, basis({i}), basis({j})), mul(t, basis({j}), basis({i})));
    }
    // trace form (a, b) -> Tr(L_{ab})
    Dense tf(n, std::vector<Scalar>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const T ab = mul(t, basis({a}), basis({b}));
            for (std::size_t k = 0; k < n; ++k) {
                const T y = mul(t, ab, basis({k}));
                auto it = y.find(Key{k});
                if (it != y.end()) tf[a][b] += it->second;
            }
        }
    s.trace_form_rank = rank(tf);
    Dense du(n, std::vector<Scalar>(n));
    for (const auto& [key, v] : comul_slot(t, unit1(t), 0)) du[key[0]][key[1]] = v;
    s.delta_unit_rank = rank(du);
    return s;
}

/// Structure constants computed straight from the transport formulas in column convention:
/// e'_j = g(e_j) = sum_i G_ij e_i; C'_{ab}^c, D'_c^{ab}, f'_a, u', s' in the new basis.
inline wha::WeakStructure transport(const wha::WeakStructure& H, const wha::Mat& G) {
    const std::size_t n = H.dim();
    const wha::Mat Gi = wha::inverse(G);
    wha::WeakStructure out(n);
    out.conductor = H.conductor;
    out.alg.unital = H.alg.unital;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Scalar m, d;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k) {
                            m += G(i, a) * G(j, b) * H.alg.mult(i, j, k) * Gi(c, k);
                            d += G(k, a) * H.coalg.comult(k, i, j) * Gi(b, i) * Gi(c, j);
                        }
                out.alg.mult(a, b, c) = m;
                out.coalg.comult(a, b, c) = d;
            }
    for (std::size_t a = 0; a < n; ++a) {
        Scalar f, u;
        for (std::size_t i = 0; i < n; ++i) {
            f += H.coalg.counit[i] * G(i, a);
            u += Gi(a, i) * H.alg.unit[i];
        }
        out.coalg.counit[a] = f;
        out.alg.unit[a] = u;
    }
    if (H.antipode) {
        // S(e_i) = sum_j s_ij e_j, i.e. the column matrix of S is s^T
        const wha::Mat S = H.antipode->transpose();
        const wha::Mat Sp = Gi * S * G;
        out.antipode = Sp.transpose();
    }
    return out;
}

// ---- random inputs

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& r, std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(r); }

using Cayley = std::vector<std::vector<std::size_t>>;

inline bool associative(const Cayley& t) {
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    return true;
}

inline Cayley product(const Cayley& x, const Cayley& y) {
    const std::size_t p = x.size(), q = y.size();
    Cayley t(p * q, std::vector<std::size_t>(p * q));
    for (std::size_t a = 0; a < p * q; ++a)
        for (std::size_t b = 0; b < p * q; ++b) t[a][b] = x[a / q][b / q] * q + y[a % q][b % q];
    return t;
}

inline Cayley relabel(const Cayley& t, Rng& r) {
    std::vector<std::size_t> p(t.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), r);
    Cayley out(t.size(), std::vector<std::size_t>(t.size()));
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b) out[p[a]][p[b]] = p[t[a][b]];
    return out;
}

/// Random finite semigroup of order 1..4: random associative tables in order <= 3 plus
/// cyclic groups, bands, semilattices, null semigroups with a zero and direct products.
inline Cayley random_semigroup(Rng& r, std::size_t max_order = 4) {
    for (;;) {
        const std::size_t kind = pick(r, 0, 6);
        Cayley t;
        if (kind <= 2) {
            const std::size_t n = pick(r, 1, std::min<std::size_t>(3, max_order));
            for (int tries = 0; tries < 100000; ++tries) {
                t.assign(n, std::vector<std::size_t>(n));
                for (auto& row : t)
                    for (auto& x : row) x = pick(r, 0, n - 1);
                if (associative(t)) break;
            }
        } else {
            const std::size_t n = pick(r, 1, max_order);
            t.assign(n, std::vector<std::size_t>(n));
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    switch (kind) {
                        case 3: t[a][b] = (a + b) % n; break;          // cyclic group
                        case 4: t[a][b] = std::max(a, b); break;       // chain semilattice
                        case 5: t[a][b] = a; break;                    // left zero band
                        default: t[a][b] = (a == 0 || b == 0) ? 0 : std::min(n - 1, a + b); break;  // truncated addition with zero
                    }
                }
            if (kind == 6 && pick(r, 0, 1) == 1 && 2 * n <= max_order) t = product(t, {{0, 1}, {1, 0}});
        }
        if (!associative(t)) continue;
        return relabel(t, r);
    }
}

/// Adjoin an identity to a semigroup (a monoid of order + 1), unless it already has one.
inline Cayley with_identity(const Cayley& t) {
    const std::size_t n = t.size();
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a) ok = ok && t[e][a] == a && t[a][e] == a;
        if (ok) return t;
    }
    Cayley m(n + 1, std::vector<std::size_t>(n + 1));
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; b <= n; ++b) m[a][b] = a == n ? b : b == n ? a : t[a][b];
    return m;
}

inline std::optional<std::size_t> identity_of(const Cayley& t) {
    for (std::size_t e = 0; e < t.size(); ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < t.size(); ++a) ok = ok && t[e][a] == a && t[a][e] == a;
        if (ok) return e;
    }
    return std::nullopt;
}

inline wha::RawAlgebra semigroup_algebra(const Cayley& t) {
    wha::RawAlgebra A(t.size());
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b) A.mult(a, b, t[a][b]) = 1;
    if (auto e = identity_of(t)) A.unit = wha::Vec::basis(t.size(), *e);
    return A;
}

/// Monoid bialgebra: Delta(s) = s (x) s, eps(s) = 1; Hopf with S(g) = g^-1 when t is a group.
inline wha::WeakStructure monoid_bialgebra(const Cayley& t) {
    const std::size_t n = t.size();
    wha::WeakStructure H(n);
    H.label = "monoid bialgebra";
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) H.alg.mult(a, b, t[a][b]) = 1;
        H.coalg.comult(a, a, a) = 1;
        H.coalg.counit[a] = 1;
    }
    const std::size_t e = *identity_of(t);
    H.alg.unit = wha::Vec::basis(n, e);
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (t[a][b] == e && t[b][a] == e) inv[a] = b;
    if (std::all_of(inv.begin(), inv.end(), [n](std::size_t x) { return x < n; })) {
        wha::Mat s(n, n);
        for (std::size_t a = 0; a < n; ++a) s(a, inv[a]) = 1;
        H.antipode = s;
    }
    return H;
}

inline Cayley cyclic(std::size_t k) {
    Cayley t(k, std::vector<std::size_t>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) t[a][b] = (a + b) % k;
    return t;
}

/// S_3 as permutations of {0,1,2}.
inline Cayley symmetric3() {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    Cayley t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::vector<std::size_t> c(3);
            for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return t;
}

inline Cayley random_group(Rng& r) {
    switch (pick(r, 0, 3)) {
        case 0: return relabel(cyclic(pick(r, 1, 5)), r);
        case 1: return relabel(product(cyclic(2), cyclic(2)), r);
        case 2: return relabel(symmetric3(), r);
        default: return relabel(product(cyclic(2), cyclic(pick(r, 1, 3))), r);
    }
}

inline Rational random_rational(Rng& r, long range = 3) {
    const long num = static_cast<long>(pick(r, 0, static_cast<std::size_t>(2 * range))) - range;
    const long den = static_cast<long>(pick(r, 1, 3));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Random invertible matrix with small rational entries, biased towards sparse ones.
inline wha::Mat random_invertible(Rng& r, std::size_t n) {
    for (;;) {
        wha::Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = pick(r, 0, 2) == 0 ? Scalar(0) : Scalar(random_rational(r));
        if (!wha::determinant(m).is_zero()) return m;
    }
}

/// Change one structure constant (C, D, f or s) by a random nonzero rational.
inline wha::WeakStructure perturb(wha::WeakStructure H, Rng& r, std::string* what = nullptr) {
    const std::size_t n = H.dim();
    Rational d;
    while (sgn(d) == 0) d = random_rational(r);
    const std::size_t a = pick(r, 0, n - 1), b = pick(r, 0, n - 1), c = pick(r, 0, n - 1);
    const std::size_t fam = pick(r, 0, H.antipode ? 3 : 2);
    auto idx = [](std::size_t i) { return std::to_string(i + 1); };
    std::string w;
    if (fam == 0) {
        H.alg.mult(a, b, c) += Scalar(d);
        w = "C[" + idx(a) + "," + idx(b) + "," + idx(c) + "]";
    } else if (fam == 1) {
        H.coalg.comult(a, b, c) += Scalar(d);
        w = "D[" + idx(a) + "," + idx(b) + "," + idx(c) + "]";
    } else if (fam == 2) {
        H.coalg.counit[a] += Scalar(d);
        w = "f[" + idx(a) + "]";
    } else {
        (*H.antipode)(a, b) += Scalar(d);
        w = "s[" + idx(a) + "," + idx(b) + "]";
    }
    if (what) *what = w + " += " + d.get_str();
    return H;
}

}  // namespace oracle
