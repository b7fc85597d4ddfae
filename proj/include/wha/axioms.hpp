#pragma once

// Axiom residuals.
//
// Map level (the reference): both sides of each axiom are evaluated with the maps in
// structure.hpp on every basis tuple, and the residual is the difference.
// Structure-constant level: the same axioms written as index sums over C, D, f, u, s.
// The two pipelines share no code beyond tensor storage; cross_check compares them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wha/structure.hpp"

namespace wha {

enum class AxiomId {
    ASSOC,
    UNIT,
    COASSOC,
    COUNIT,
    COMPAT,
    WEAK_UNIT_A,
    WEAK_UNIT_B,
    WEAK_COUNIT_A,
    WEAK_COUNIT_B,
    ANTIPODE_1,
    ANTIPODE_2,
    ANTIPODE_3,
    STRICT_DELTA_UNIT,
    STRICT_EPS_MULT,
};

inline constexpr std::array<AxiomId, 14> all_axioms = {
    AxiomId::ASSOC,         AxiomId::UNIT,          AxiomId::COASSOC,     AxiomId::COUNIT,
    AxiomId::COMPAT,        AxiomId::WEAK_UNIT_A,   AxiomId::WEAK_UNIT_B, AxiomId::WEAK_COUNIT_A,
    AxiomId::WEAK_COUNIT_B, AxiomId::ANTIPODE_1,    AxiomId::ANTIPODE_2,  AxiomId::ANTIPODE_3,
    AxiomId::STRICT_DELTA_UNIT, AxiomId::STRICT_EPS_MULT,
};

inline const char* axiom_name(AxiomId a) {
    switch (a) {
        case AxiomId::ASSOC: return "ASSOC";
        case AxiomId::UNIT: return "UNIT";
        case AxiomId::COASSOC: return "COASSOC";
        case AxiomId::COUNIT: return "COUNIT";
        case AxiomId::COMPAT: return "COMPAT";
        case AxiomId::WEAK_UNIT_A: return "WEAK_UNIT_A";
        case AxiomId::WEAK_UNIT_B: return "WEAK_UNIT_B";
        case AxiomId::WEAK_COUNIT_A: return "WEAK_COUNIT_A";
        case AxiomId::WEAK_COUNIT_B: return "WEAK_COUNIT_B";
        case AxiomId::ANTIPODE_1: return "ANTIPODE_1";
        case AxiomId::ANTIPODE_2: return "ANTIPODE_2";
        case AxiomId::ANTIPODE_3: return "ANTIPODE_3";
        case AxiomId::STRICT_DELTA_UNIT: return "STRICT_DELTA_UNIT";
        case AxiomId::STRICT_EPS_MULT: return "STRICT_EPS_MULT";
    }
    return "?";
}

inline bool is_antipode_axiom(AxiomId a) {
    return a == AxiomId::ANTIPODE_1 || a == AxiomId::ANTIPODE_2 || a == AxiomId::ANTIPODE_3;
}

enum class Level { Algebra, Coalgebra, WeakBialgebra, WeakHopf, StrictBialgebra, StrictHopf };

inline const char* level_name(Level l) {
    switch (l) {
        case Level::Algebra: return "algebra";
        case Level::Coalgebra: return "coalgebra";
        case Level::WeakBialgebra: return "weak-bialgebra";
        case Level::WeakHopf: return "weak-hopf";
        case Level::StrictBialgebra: return "strict-bialgebra";
        case Level::StrictHopf: return "strict-hopf";
    }
    return "?";
}

inline Level parse_level(const std::string& s) {
    for (Level l : {Level::Algebra, Level::Coalgebra, Level::WeakBialgebra, Level::WeakHopf, Level::StrictBialgebra, Level::StrictHopf})
        if (s == level_name(l)) return l;
    throw InputError("unknown level '" + s + "'");
}

inline std::vector<AxiomId> axioms_for(Level l) {
    using A = AxiomId;
    std::vector<AxiomId> alg{A::ASSOC, A::UNIT}, coalg{A::COASSOC, A::COUNIT};
    std::vector<AxiomId> weak{A::ASSOC, A::UNIT, A::COASSOC, A::COUNIT, A::COMPAT,
                              A::WEAK_UNIT_A, A::WEAK_UNIT_B, A::WEAK_COUNIT_A, A::WEAK_COUNIT_B};
    switch (l) {
        case Level::Algebra: return alg;
        case Level::Coalgebra: return coalg;
        case Level::WeakBialgebra: return weak;
        case Level::WeakHopf:
            weak.insert(weak.end(), {A::ANTIPODE_1, A::ANTIPODE_2, A::ANTIPODE_3});
            return weak;
        case Level::StrictBialgebra:
            weak.insert(weak.end(), {A::STRICT_DELTA_UNIT, A::STRICT_EPS_MULT});
            return weak;
        case Level::StrictHopf:
            weak.insert(weak.end(), {A::ANTIPODE_1, A::ANTIPODE_2, A::ANTIPODE_3, A::STRICT_DELTA_UNIT, A::STRICT_EPS_MULT});
            return weak;
    }
    return weak;
}

/// One nonzero residual component. Indices are 0-based here; reports print them 1-based.
struct ResidualEntry {
    std::vector<std::size_t> input;      // basis tuple the axiom was evaluated on
    std::vector<std::size_t> component;  // output coordinate
    Scalar lhs, rhs;
    Scalar value() const { return lhs - rhs; }
};

/// "(e1,e2,e3) [e1(x)e2]: lhs != rhs", 1-based.
inline std::string describe(const ResidualEntry& e) {
    auto tuple = [](const std::vector<std::size_t>& v, const char* sep) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::string("e") + std::to_string(v[i] + 1);
        return s;
    };
    std::string s = "(" + tuple(e.input, ",") + ")";
    if (!e.component.empty()) s += " [" + tuple(e.component, "(x)") + "]";
    return s + ": " + e.lhs.to_string() + " != " + e.rhs.to_string();
}

struct Residual {
    AxiomId axiom{};
    std::size_t evaluated = 0;   // number of scalar components compared
    std::size_t nonzero = 0;     // number of nonzero components
    std::vector<ResidualEntry> entries;  // the first few nonzero components, evaluation order
    std::optional<ResidualEntry> largest;

    static constexpr std::size_t kept = 32;
    bool pass() const { return nonzero == 0; }
    const ResidualEntry* first() const { return entries.empty() ? nullptr : &entries.front(); }
    Scalar max_residual() const { return largest ? largest->value() : Scalar(0); }

    /// The recorded entry for a given input tuple and component, if that entry was kept.
    const ResidualEntry* find(const std::vector<std::size_t>& input, const std::vector<std::size_t>& component = {}) const {
        for (const auto& e : entries)
            if (e.input == input && (component.empty() || e.component == component)) return &e;
        return nullptr;
    }
};

namespace detail {

class Collector {
public:
    Collector(AxiomId a, bool stop_early) : stop_(stop_early) { r_.axiom = a; }

    bool done() const { return stop_ && r_.nonzero > 0; }

    void compare(const std::vector<std::size_t>& input, std::vector<std::size_t> comp, const Scalar& lhs, const Scalar& rhs) {
        ++r_.evaluated;
        if (lhs == rhs) return;
        ++r_.nonzero;
        ResidualEntry e{input, std::move(comp), lhs, rhs};
        if (!r_.largest || r_.largest->value().height() < e.value().height()) r_.largest = e;
        if (r_.entries.size() < Residual::kept) r_.entries.push_back(std::move(e));
    }
    void compare(const std::vector<std::size_t>& input, const Vec& lhs, const Vec& rhs, std::size_t tag = SIZE_MAX) {
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            std::vector<std::size_t> comp;
            if (tag != SIZE_MAX) comp.push_back(tag);
            comp.push_back(k);
            compare(input, std::move(comp), lhs[k], rhs[k]);
        }
    }
    void compare(const std::vector<std::size_t>& input, const Tensor2& lhs, const Tensor2& rhs) {
        const std::size_t n = lhs.dim();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) compare(input, {a, b}, lhs(a, b), rhs(a, b));
    }
    void compare(const std::vector<std::size_t>& input, const Tensor3& lhs, const Tensor3& rhs) {
        const std::size_t n = lhs.dim();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) compare(input, {a, b, c}, lhs(a, b, c), rhs(a, b, c));
    }
    Residual take() { return std::move(r_); }

private:
    Residual r_;
    bool stop_;
};

inline Tensor2 comult_basis(const WeakStructure& H, std::size_t i) {
    return comultiply(H.coalg, Vec::basis(H.dim(), i));
}

// eps(e_i e_j)
inline Mat counit_of_products(const WeakStructure& H) {
    const std::size_t n = H.dim();
    Mat E(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            E(i, j) = counit(H.coalg, multiply(H.alg, Vec::basis(n, i), Vec::basis(n, j)));
    return E;
}

}  // namespace detail

/// Map-level residual of one axiom. With stop_early the evaluation stops at the first
/// nonzero component (used by search); the pass flag is still exact.
inline Residual residual(const WeakStructure& H, AxiomId a, bool stop_early = false) {
    H.validate();
    if (is_antipode_axiom(a) && !H.antipode) throw InputError(std::string(axiom_name(a)) + " needs an antipode");
    const std::size_t n = H.dim();
    const AlgebraStruct& A = H.alg;
    const CoalgebraStruct& C = H.coalg;
    auto e = [n](std::size_t i) { return Vec::basis(n, i); };
    detail::Collector col(a, stop_early);

    switch (a) {
        case AxiomId::ASSOC:
            for (std::size_t i = 0; i < n && !col.done(); ++i)
                for (std::size_t j = 0; j < n && !col.done(); ++j) {
                    Vec ij = multiply(A, e(i), e(j));
                    for (std::size_t k = 0; k < n && !col.done(); ++k)
                        col.compare({i, j, k}, multiply(A, ij, e(k)), multiply(A, e(i), multiply(A, e(j), e(k))));
                }
            break;
        case AxiomId::UNIT:
            for (std::size_t i = 0; i < n && !col.done(); ++i) {
                col.compare({i}, multiply(A, A.unit, e(i)), e(i), 0);
                col.compare({i}, multiply(A, e(i), A.unit), e(i), 1);
            }
            break;
        case AxiomId::COASSOC:
            for (std::size_t i = 0; i < n && !col.done(); ++i) {
                Tensor2 d = comultiply(C, e(i));
                col.compare({i}, comultiply_left(C, d), comultiply_right(C, d));
            }
            break;
        case AxiomId::COUNIT:
            for (std::size_t i = 0; i < n && !col.done(); ++i) {
                Tensor2 d = comultiply(C, e(i));
                Vec left(n), right(n);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        if (d(p, q).is_zero()) continue;
                        left += (d(p, q) * counit(C, e(p))) * e(q);
                        right += (d(p, q) * counit(C, e(q))) * e(p);
                    }
                col.compare({i}, left, e(i), 0);
                col.compare({i}, right, e(i), 1);
            }
            break;
        case AxiomId::COMPAT:
            for (std::size_t i = 0; i < n && !col.done(); ++i)
                for (std::size_t j = 0; j < n && !col.done(); ++j)
                    col.compare({i, j}, comultiply(C, multiply(A, e(i), e(j))),
                                multiply2(A, comultiply(C, e(i)), comultiply(C, e(j))));
            break;
        case AxiomId::WEAK_UNIT_A:
        case AxiomId::WEAK_UNIT_B: {
            Tensor2 d1 = comultiply(C, A.unit);
            Tensor3 d1_one(n), one_d1(n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    for (std::size_t r = 0; r < n; ++r) {
                        d1_one(p, q, r) = d1(p, q) * A.unit[r];
                        one_d1(p, q, r) = A.unit[p] * d1(q, r);
                    }
            Tensor3 lhs = comultiply_left(C, d1);
            Tensor3 rhs = a == AxiomId::WEAK_UNIT_A ? multiply3(A, d1_one, one_d1) : multiply3(A, one_d1, d1_one);
            col.compare({}, lhs, rhs);
            break;
        }
        case AxiomId::WEAK_COUNIT_A:
        case AxiomId::WEAK_COUNIT_B: {
            // eps(xyz) against eps(x y1) eps(y2 z) (A) or eps(x y2) eps(y1 z) (B)
            for (std::size_t i = 0; i < n && !col.done(); ++i)
                for (std::size_t j = 0; j < n && !col.done(); ++j) {
                    Vec ij = multiply(A, e(i), e(j));
                    Tensor2 dj = comultiply(C, e(j));
                    for (std::size_t k = 0; k < n && !col.done(); ++k) {
                        Scalar lhs = counit(C, multiply(A, ij, e(k)));
                        Scalar rhs;
                        for (std::size_t p = 0; p < n; ++p)
                            for (std::size_t q = 0; q < n; ++q) {
                                if (dj(p, q).is_zero()) continue;
                                const std::size_t y1 = p, y2 = q;
                                if (a == AxiomId::WEAK_COUNIT_A)
                                    rhs += dj(p, q) * counit(C, multiply(A, e(i), e(y1))) * counit(C, multiply(A, e(y2), e(k)));
                                else
                                    rhs += dj(p, q) * counit(C, multiply(A, e(i), e(y2))) * counit(C, multiply(A, e(y1), e(k)));
                            }
                        col.compare({i, j, k}, {}, lhs, rhs);
                    }
                }
            break;
        }
        case AxiomId::ANTIPODE_1:
        case AxiomId::ANTIPODE_2: {
            Tensor2 d1 = comultiply(C, A.unit);
            for (std::size_t i = 0; i < n && !col.done(); ++i) {
                Tensor2 d = comultiply(C, e(i));
                Vec lhs(n), rhs(n);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        if (!d(p, q).is_zero()) {
                            if (a == AxiomId::ANTIPODE_1) lhs += d(p, q) * multiply(A, e(p), apply_antipode(H, e(q)));
                            else lhs += d(p, q) * multiply(A, apply_antipode(H, e(p)), e(q));
                        }
                        if (!d1(p, q).is_zero()) {
                            // eps(1_(1) x) 1_(2)   resp.   1_(1) eps(x 1_(2))
                            if (a == AxiomId::ANTIPODE_1) rhs += (d1(p, q) * counit(C, multiply(A, e(p), e(i)))) * multiply(A, e(q), A.unit);
                            else rhs += (d1(p, q) * counit(C, multiply(A, e(i), e(q)))) * multiply(A, A.unit, e(p));
                        }
                    }
                col.compare({i}, lhs, rhs);
            }
            break;
        }
        case AxiomId::ANTIPODE_3:
            for (std::size_t i = 0; i < n && !col.done(); ++i) {
                Tensor3 dd = comultiply_left(C, comultiply(C, e(i)));
                Vec lhs(n);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        for (std::size_t r = 0; r < n; ++r) {
                            if (dd(p, q, r).is_zero()) continue;
                            Vec t = multiply(A, multiply(A, apply_antipode(H, e(p)), e(q)), apply_antipode(H, e(r)));
                            lhs += dd(p, q, r) * t;
                        }
                col.compare({i}, lhs, apply_antipode(H, e(i)));
            }
            break;
        case AxiomId::STRICT_DELTA_UNIT:
            col.compare({}, comultiply(C, A.unit), outer(A.unit, A.unit));
            break;
        case AxiomId::STRICT_EPS_MULT:
            for (std::size_t i = 0; i < n && !col.done(); ++i)
                for (std::size_t j = 0; j < n && !col.done(); ++j)
                    col.compare({i, j}, {}, counit(C, multiply(A, e(i), e(j))), counit(C, e(i)) * counit(C, e(j)));
            break;
    }
    return col.take();
}

enum class AxiomStatus { Pass, Fail, Missing };

inline const char* status_name(AxiomStatus s) {
    switch (s) {
        case AxiomStatus::Pass: return "pass";
        case AxiomStatus::Fail: return "fail";
        case AxiomStatus::Missing: return "missing";
    }
    return "?";
}

struct AxiomReport {
    AxiomId axiom{};
    AxiomStatus status = AxiomStatus::Pass;
    Residual residual;
    std::string note;
};

struct VerificationReport {
    Level level{};
    std::string label;
    std::size_t dim = 0;
    std::vector<AxiomReport> axioms;

    bool pass() const {
        for (const auto& a : axioms)
            if (a.status != AxiomStatus::Pass) return false;
        return true;
    }
    const AxiomReport* get(AxiomId id) const {
        for (const auto& a : axioms)
            if (a.axiom == id) return &a;
        return nullptr;
    }
    /// pass/fail per axiom, in report order
    std::vector<bool> pass_vector() const {
        std::vector<bool> v;
        for (const auto& a : axioms) v.push_back(a.status == AxiomStatus::Pass);
        return v;
    }
};

inline VerificationReport verify(const WeakStructure& H, Level level) {
    VerificationReport rep;
    rep.level = level;
    rep.label = H.label;
    rep.dim = H.dim();
    for (AxiomId a : axioms_for(level)) {
        AxiomReport ar;
        ar.axiom = a;
        ar.residual.axiom = a;
        if (is_antipode_axiom(a) && !H.antipode) {
            ar.status = AxiomStatus::Missing;
            ar.note = "no antipode supplied";
        } else if (a == AxiomId::UNIT && !H.alg.unital) {
            ar.status = AxiomStatus::Missing;
            ar.note = "no unit supplied";
        } else {
            ar.residual = residual(H, a);
            ar.status = ar.residual.pass() ? AxiomStatus::Pass : AxiomStatus::Fail;
        }
        rep.axioms.push_back(std::move(ar));
    }
    return rep;
}

/// Short-circuit check used when only the verdict matters.
inline bool satisfies(const WeakStructure& H, Level level) {
    for (AxiomId a : axioms_for(level)) {
        if (is_antipode_axiom(a) && !H.antipode) return false;
        if (a == AxiomId::UNIT && !H.alg.unital) return false;
        if (!residual(H, a, true).pass()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Structure-constant equations

enum class ScEquation { SC1, SC2, SC3, SC4, SC5, SCS1, SCS2, SCS3 };

inline constexpr std::array<ScEquation, 8> all_sc_equations = {
    ScEquation::SC1, ScEquation::SC2, ScEquation::SC3, ScEquation::SC4,
    ScEquation::SC5, ScEquation::SCS1, ScEquation::SCS2, ScEquation::SCS3,
};

inline const char* sc_name(ScEquation e) {
    switch (e) {
        case ScEquation::SC1: return "SC1";
        case ScEquation::SC2: return "SC2";
        case ScEquation::SC3: return "SC3";
        case ScEquation::SC4: return "SC4";
        case ScEquation::SC5: return "SC5";
        case ScEquation::SCS1: return "SCS1";
        case ScEquation::SCS2: return "SCS2";
        case ScEquation::SCS3: return "SCS3";
    }
    return "?";
}

/// One block of an index-sum equation and the map-level axiom it encodes.
struct ScPart {
    std::string name;
    AxiomId counterpart{};
    std::size_t evaluated = 0;
    std::size_t nonzero = 0;
    std::optional<std::vector<std::size_t>> witness{};  // free indices of the first nonzero component
    bool pass() const { return nonzero == 0; }
};

struct ScResidual {
    ScEquation eq{};
    bool applicable = true;  // antipode equations need an antipode
    std::vector<ScPart> parts;
    bool pass() const {
        for (const auto& p : parts)
            if (!p.pass()) return false;
        return true;
    }
};

namespace detail {

struct ScContext {
    std::size_t n;
    const Tensor3& C;  // C(a,b,c) = C_{a,b}^c
    const Tensor3& D;  // D(k,i,j) = D_k^{i,j}
    const Vec& f;
    const Vec& u;
    Mat U;  // U(a,b) = sum_c u_c D_c^{a,b}, the coefficients of Delta(1)

    explicit ScContext(const WeakStructure& H)
        : n(H.dim()), C(H.alg.mult), D(H.coalg.comult), f(H.coalg.counit), u(H.alg.unit), U(H.dim(), H.dim()) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (!u[c].is_zero()) U(a, b) += u[c] * D(c, a, b);
    }
    Scalar delta(std::size_t a, std::size_t b) const { return a == b ? Scalar(1) : Scalar(0); }
};

inline void sc_record(ScPart& p, std::vector<std::size_t> idx, const Scalar& v) {
    ++p.evaluated;
    if (v.is_zero()) return;
    if (p.nonzero++ == 0) p.witness = std::move(idx);
}

}  // namespace detail

inline ScResidual sc_residual(const WeakStructure& H, ScEquation eq) {
    H.validate();
    const detail::ScContext x(H);
    const std::size_t n = x.n;
    const auto& C = x.C;
    const auto& D = x.D;
    const auto& f = x.f;
    const auto& u = x.u;
    const auto& U = x.U;
    ScResidual out;
    out.eq = eq;
    using A = AxiomId;

    switch (eq) {
        case ScEquation::SC1: {
            // sum_l D_s^{l,k} D_l^{i,j} - D_s^{i,l} D_l^{j,k}
            ScPart p{"coassociativity", A::COASSOC};
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k) {
                            Scalar v;
                            for (std::size_t l = 0; l < n; ++l) v += D(s, l, k) * D(l, i, j) - D(s, i, l) * D(l, j, k);
                            detail::sc_record(p, {s, i, j, k}, v);
                        }
            out.parts.push_back(std::move(p));
            break;
        }
        case ScEquation::SC2: {
            // sum_j f_j D_i^{j,k} = delta_{i,k} and sum_k D_i^{j,k} f_k = delta_{i,j}
            ScPart left{"left counit", A::COUNIT}, right{"right counit", A::COUNIT};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    Scalar l, r;
                    for (std::size_t j = 0; j < n; ++j) {
                        l += f[j] * D(i, j, k);
                        r += D(i, k, j) * f[j];
                    }
                    detail::sc_record(left, {i, k}, l - x.delta(i, k));
                    detail::sc_record(right, {i, k}, r - x.delta(i, k));
                }
            out.parts.push_back(std::move(left));
            out.parts.push_back(std::move(right));
            break;
        }
        case ScEquation::SC3: {
            // sum_l C_{i,j}^l D_l^{s,r} - sum_{t,l,p,q} D_i^{t,l} D_j^{p,q} C_{t,p}^s C_{l,q}^r
            ScPart p{"multiplicativity", A::COMPAT};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t s = 0; s < n; ++s)
                        for (std::size_t r = 0; r < n; ++r) {
                            Scalar v;
                            for (std::size_t l = 0; l < n; ++l) v += C(i, j, l) * D(l, s, r);
                            for (std::size_t t = 0; t < n; ++t)
                                for (std::size_t l = 0; l < n; ++l) {
                                    if (D(i, t, l).is_zero()) continue;
                                    for (std::size_t pp = 0; pp < n; ++pp)
                                        for (std::size_t q = 0; q < n; ++q) {
                                            if (D(j, pp, q).is_zero()) continue;
                                            v -= D(i, t, l) * D(j, pp, q) * C(t, pp, s) * C(l, q, r);
                                        }
                                }
                            detail::sc_record(p, {i, j, s, r}, v);
                        }
            out.parts.push_back(std::move(p));
            break;
        }
        case ScEquation::SC4: {
            // lhs(s,r,k) = sum_l U^{l,k} D_l^{s,r}
            // A: sum U^{p,q} U^{t,l} u_a u_b C_{p,a}^s C_{q,t}^r C_{b,l}^k
            // B: sum U^{t,l} U^{p,q} u_a u_b C_{a,p}^s C_{t,q}^r C_{l,b}^k
            Mat rightByOne(n, n), leftByOne(n, n);  // (p,s): C_{p,a}^s u_a ; C_{a,p}^s u_a
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t a = 0; a < n; ++a) {
                        if (u[a].is_zero()) continue;
                        rightByOne(p, s) += u[a] * C(p, a, s);
                        leftByOne(p, s) += u[a] * C(a, p, s);
                    }
            // XA(s,q) = sum_p U^{p,q} rightByOne(p,s);  YA(t,k) = sum_l U^{t,l} leftByOne(l,k)
            // XB(s,q) = sum_p U^{p,q} leftByOne(p,s);   YB(t,k) = sum_l U^{t,l} rightByOne(l,k)
            Mat XA(n, n), YA(n, n), XB(n, n), YB(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t p = 0; p < n; ++p) {
                        XA(a, b) += U(p, b) * rightByOne(p, a);
                        XB(a, b) += U(p, b) * leftByOne(p, a);
                        YA(a, b) += U(a, p) * leftByOne(p, b);
                        YB(a, b) += U(a, p) * rightByOne(p, b);
                    }
            ScPart pa{"unit order A", A::WEAK_UNIT_A}, pb{"unit order B", A::WEAK_UNIT_B};
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t k = 0; k < n; ++k) {
                        Scalar lhs;
                        for (std::size_t l = 0; l < n; ++l) lhs += U(l, k) * D(l, s, r);
                        Scalar ra, rb;
                        for (std::size_t q = 0; q < n; ++q)
                            for (std::size_t t = 0; t < n; ++t) {
                                if (!C(q, t, r).is_zero()) ra += XA(s, q) * C(q, t, r) * YA(t, k);
                                if (!C(t, q, r).is_zero()) rb += XB(s, q) * C(t, q, r) * YB(t, k);
                            }
                        detail::sc_record(pa, {s, r, k}, lhs - ra);
                        detail::sc_record(pb, {s, r, k}, lhs - rb);
                    }
            out.parts.push_back(std::move(pa));
            out.parts.push_back(std::move(pb));
            break;
        }
        case ScEquation::SC5: {
            // sum C_{i,j}^t C_{t,k}^r f_r
            //   = sum D_j^{p,q} C_{i,p}^t C_{q,k}^r f_t f_r     (A)
            //   = sum D_j^{p,q} C_{i,q}^r C_{p,k}^t f_t f_r     (B)
            Mat E(n, n);  // E(i,p) = sum_t C_{i,p}^t f_t
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t t = 0; t < n; ++t) E(i, p) += C(i, p, t) * f[t];
            ScPart pa{"counit order A", A::WEAK_COUNIT_A}, pb{"counit order B", A::WEAK_COUNIT_B};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        Scalar lhs;
                        for (std::size_t t = 0; t < n; ++t)
                            for (std::size_t r = 0; r < n; ++r) lhs += C(i, j, t) * C(t, k, r) * f[r];
                        Scalar ra, rb;
                        for (std::size_t p = 0; p < n; ++p)
                            for (std::size_t q = 0; q < n; ++q) {
                                if (D(j, p, q).is_zero()) continue;
                                ra += D(j, p, q) * E(i, p) * E(q, k);
                                rb += D(j, p, q) * E(i, q) * E(p, k);
                            }
                        detail::sc_record(pa, {i, j, k}, lhs - ra);
                        detail::sc_record(pb, {i, j, k}, lhs - rb);
                    }
            out.parts.push_back(std::move(pa));
            out.parts.push_back(std::move(pb));
            break;
        }
        case ScEquation::SCS1:
        case ScEquation::SCS2: {
            if (!H.antipode) {
                out.applicable = false;
                break;
            }
            const Mat& sm = *H.antipode;
            const bool first = eq == ScEquation::SCS1;
            ScPart p{first ? "left antipode" : "right antipode", first ? A::ANTIPODE_1 : A::ANTIPODE_2};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t t = 0; t < n; ++t) {
                    Scalar v;
                    // SCS1: sum D_i^{j,k} s_{k,r} C_{j,r}^t ; SCS2: sum D_i^{k,j} s_{k,r} C_{r,j}^t
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k)
                            for (std::size_t r = 0; r < n; ++r) {
                                if (first) v += D(i, j, k) * sm(k, r) * C(j, r, t);
                                else v += D(i, k, j) * sm(k, r) * C(r, j, t);
                            }
                    // SCS1: sum U^{a,b} C_{a,i}^c f_c u_d C_{b,d}^t ; SCS2: sum U^{a,b} u_d C_{d,a}^t C_{i,b}^c f_c
                    for (std::size_t a = 0; a < n; ++a)
                        for (std::size_t b = 0; b < n; ++b) {
                            if (U(a, b).is_zero()) continue;
                            Scalar epsProd;
                            for (std::size_t c = 0; c < n; ++c) epsProd += (first ? C(a, i, c) : C(i, b, c)) * f[c];
                            Scalar unitSide;
                            for (std::size_t d = 0; d < n; ++d) unitSide += u[d] * (first ? C(b, d, t) : C(d, a, t));
                            v -= U(a, b) * epsProd * unitSide;
                        }
                    detail::sc_record(p, {i, t}, v);
                }
            out.parts.push_back(std::move(p));
            break;
        }
        case ScEquation::SCS3: {
            if (!H.antipode) {
                out.applicable = false;
                break;
            }
            // sum D_i^{p,q} D_p^{j,r} s_{j,m} s_{q,l} C_{m,r}^t C_{t,l}^k - s_{i,k}
            const Mat& sm = *H.antipode;
            ScPart part{"antipode sandwich", A::ANTIPODE_3};
            for (std::size_t i = 0; i < n; ++i) {
                Tensor3 T(n);  // T(j,r,q) = sum_p D_i^{p,q} D_p^{j,r}
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        if (D(i, p, q).is_zero()) continue;
                        for (std::size_t j = 0; j < n; ++j)
                            for (std::size_t r = 0; r < n; ++r) T(j, r, q) += D(i, p, q) * D(p, j, r);
                    }
                Tensor3 V(n);  // V(m,r,q) = sum_j s_{j,m} T(j,r,q)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t m = 0; m < n; ++m) {
                        if (sm(j, m).is_zero()) continue;
                        for (std::size_t r = 0; r < n; ++r)
                            for (std::size_t q = 0; q < n; ++q) V(m, r, q) += sm(j, m) * T(j, r, q);
                    }
                Mat W(n, n);  // W(t,q) = sum_{m,r} V(m,r,q) C_{m,r}^t
                for (std::size_t m = 0; m < n; ++m)
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t t = 0; t < n; ++t) {
                            if (C(m, r, t).is_zero()) continue;
                            for (std::size_t q = 0; q < n; ++q) W(t, q) += V(m, r, q) * C(m, r, t);
                        }
                Mat X = W * sm;  // X(t,l) = sum_q W(t,q) s_{q,l}
                for (std::size_t k = 0; k < n; ++k) {
                    Scalar v = -sm(i, k);
                    for (std::size_t t = 0; t < n; ++t)
                        for (std::size_t l = 0; l < n; ++l) v += X(t, l) * C(t, l, k);
                    detail::sc_record(part, {i, k}, v);
                }
            }
            out.parts.push_back(std::move(part));
            break;
        }
    }
    return out;
}

struct CrossCheckLine {
    ScEquation eq{};
    AxiomId axiom{};
    bool map_pass = false;
    bool sc_pass = false;
    bool consistent() const { return map_pass == sc_pass; }
};

struct CrossCheckReport {
    std::string label;
    std::vector<CrossCheckLine> lines;
    bool consistent() const {
        for (const auto& l : lines)
            if (!l.consistent()) return false;
        return true;
    }
};

/// For every equation and every axiom it encodes: map-level pass <=> index-sum pass.
inline CrossCheckReport cross_check(const WeakStructure& H) {
    CrossCheckReport rep;
    rep.label = H.label;
    for (ScEquation eq : all_sc_equations) {
        ScResidual sc = sc_residual(H, eq);
        if (!sc.applicable) continue;
        std::vector<AxiomId> seen;
        for (const auto& part : sc.parts) {
            if (std::find(seen.begin(), seen.end(), part.counterpart) != seen.end()) continue;
            seen.push_back(part.counterpart);
            bool sc_pass = true;
            for (const auto& q : sc.parts)
                if (q.counterpart == part.counterpart) sc_pass = sc_pass && q.pass();
            rep.lines.push_back({eq, part.counterpart, residual(H, part.counterpart).pass(), sc_pass});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Alternative index readings of three equations, evaluated only for the errata report.
// All assume the unit is the first basis vector.

enum class Reading {
    CompatOuterSum,    // multiplicativity with the outer sum over l also applied to the product term
    UnitOuterSum,      // weak unit, order B, the same outer-sum reading
    UnitInnerSum,      // weak unit, order B, outer sum only on the first term
    SandwichSwapped,   // antipode sandwich with s_{r,m} in place of s_{j,m}
};

inline const char* reading_name(Reading r) {
    switch (r) {
        case Reading::CompatOuterSum: return "multiplicativity, outer sum over l on both terms";
        case Reading::UnitOuterSum: return "weak unit, outer sum over l on both terms";
        case Reading::UnitInnerSum: return "weak unit, outer sum over l on the first term only";
        case Reading::SandwichSwapped: return "antipode sandwich with s_{r,m}";
    }
    return "?";
}

/// true iff the reading vanishes identically on H
inline bool reading_vanishes(const WeakStructure& H, Reading rd) {
    const std::size_t n = H.dim();
    const auto& C = H.alg.mult;
    const auto& D = H.coalg.comult;
    const Scalar nn(static_cast<long>(n));
    switch (rd) {
        case Reading::CompatOuterSum:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t s = 0; s < n; ++s)
                        for (std::size_t r = 0; r < n; ++r) {
                            Scalar first, inner;
                            for (std::size_t l = 0; l < n; ++l) first += C(i, j, l) * D(l, s, r);
                            for (std::size_t p = 0; p < n; ++p)
                                for (std::size_t q = 0; q < n; ++q)
                                    for (std::size_t t = 0; t < n; ++t)
                                        for (std::size_t l = 0; l < n; ++l)
                                            inner += D(i, t, l) * D(j, p, q) * C(t, p, s) * C(l, q, r);
                            if (!(first - nn * inner).is_zero()) return false;
                        }
            return true;
        case Reading::UnitOuterSum:
        case Reading::UnitInnerSum: {
            const Scalar factor = rd == Reading::UnitOuterSum ? nn : Scalar(1);
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t k = 0; k < n; ++k) {
                        Scalar first, inner;
                        for (std::size_t l = 0; l < n; ++l) first += D(0, s, l) * D(l, r, k);
                        for (std::size_t p = 0; p < n; ++p)
                            for (std::size_t q = 0; q < n; ++q)
                                for (std::size_t t = 0; t < n; ++t)
                                    for (std::size_t l = 0; l < n; ++l)
                                        inner += D(0, p, q) * D(0, t, l) * C(0, t, s) * C(p, l, r) * C(q, 0, k);
                        if (!(first - factor * inner).is_zero()) return false;
                    }
            return true;
        }
        case Reading::SandwichSwapped: {
            if (!H.antipode) throw InputError("reading needs an antipode");
            const Mat& sm = *H.antipode;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    Scalar v = -sm(i, k);
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q) {
                            if (D(i, p, q).is_zero()) continue;
                            for (std::size_t j = 0; j < n; ++j)
                                for (std::size_t r = 0; r < n; ++r) {
                                    if (D(p, j, r).is_zero()) continue;
                                    for (std::size_t m = 0; m < n; ++m)
                                        for (std::size_t l = 0; l < n; ++l)
                                            for (std::size_t t = 0; t < n; ++t)
                                                v += D(i, p, q) * D(p, j, r) * sm(r, m) * sm(q, l) * C(m, r, t) * C(t, l, k);
                                }
                        }
                    if (!v.is_zero()) return false;
                }
            return true;
        }
    }
    return false;
}

}  // namespace wha
