#pragma once

// Classified structures in dims 2 and 3, invariant fingerprints, pairwise separation and
// automorphism-claim checking.
//
// Ids: alg2.1, alg2.2, alg3.1..alg3.5, wba2.1..3, wha2.1..2, wba3.1..20, wha3.1..3.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wha/transport.hpp"

namespace wha {

inline constexpr const char* kCatalogRevision = "catalog-r3";

enum class Kind { Algebra, WeakBialgebra, WeakHopf };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Algebra: return "algebra";
        case Kind::WeakBialgebra: return "weak-bialgebra";
        default: return "weak-hopf";
    }
}

inline const char* kind_prefix(Kind k) {
    switch (k) {
        case Kind::Algebra: return "alg";
        case Kind::WeakBialgebra: return "wba";
        default: return "wha";
    }
}

inline Kind parse_kind(const std::string& s) {
    if (s == "algebra" || s == "alg") return Kind::Algebra;
    if (s == "weak-bialgebra" || s == "wba") return Kind::WeakBialgebra;
    if (s == "weak-hopf" || s == "wha") return Kind::WeakHopf;
    throw InputError("unknown kind '" + s + "' (algebra|weak-bialgebra|weak-hopf)");
}

inline Level level_for(Kind k) {
    switch (k) {
        case Kind::Algebra: return Level::Algebra;
        case Kind::WeakBialgebra: return Level::WeakBialgebra;
        default: return Level::WeakHopf;
    }
}

/// A claimed automorphism group: finitely generated with a claimed order, or a
/// parametric family (with optional named points checked individually).
struct AutClaim {
    enum class Type { Finite, Family };
    Type type = Type::Finite;
    std::string statement;
    std::vector<Mat> generators;
    std::size_t claimed_order = 0;
    std::optional<ParamMatrix> family;
    std::size_t family_dim = 0;  // parameters of the family, the expected tangent dimension
    std::vector<std::vector<Rational>> named_points;
    std::string named_points_label;
};

struct CatalogEntry {
    std::size_t dim = 0;
    Kind kind = Kind::Algebra;
    std::size_t index = 0;
    std::string algebra;  // underlying algebra id, e.g. alg3.1
    WeakStructure structure;
    std::vector<std::string> notes;
    std::optional<AutClaim> claim;

    std::string id() const { return std::string(kind_prefix(kind)) + std::to_string(dim) + "." + std::to_string(index); }
};

namespace detail {

struct TableBuilder {
    std::size_t n;
    Vec e(std::size_t i) const { return Vec::basis(n, i - 1); }  // 1-based
};

// e_i e_j = e_max(i,j) except the listed (i,j) pairs, which are 0 (1-based).
inline AlgebraStruct maxlike(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> zeros) {
    AlgebraStruct A(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            bool z = false;
            for (auto [a, b] : zeros) z = z || (a == i && b == j);
            if (!z) A.mult(i - 1, j - 1, std::max(i, j) - 1) = 1;
        }
    A.unit = Vec::basis(n, 0);
    return A;
}

using Terms = std::vector<std::pair<Vec, Vec>>;

inline WeakStructure table(const AlgebraStruct& A, const std::vector<Terms>& delta, const std::vector<long>& eps) {
    const std::size_t n = A.dim;
    WeakStructure H(n);
    H.alg = A;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [a, b] : delta[k]) add_outer(H.coalg.comult, k, a, b);
    for (std::size_t k = 0; k < n; ++k) H.coalg.counit[k] = eps[k];
    return H;
}

inline Vec operator*(long s, const Vec& v) { return Scalar(s) * v; }

inline Mat dim3_t1() { return Mat{{1, 0, 0}, {0, 1, 1}, {0, 0, -1}}; }
inline Mat dim3_t2() { return Mat{{1, 1, 0}, {0, 0, 1}, {0, -1, -1}}; }
inline Mat dim2_t() { return Mat{{1, 1}, {0, -1}}; }

inline AutClaim order6_claim() {
    AutClaim c;
    c.type = AutClaim::Type::Finite;
    c.statement = "automorphism group of order 6 generated by [[1,0,0],[0,1,1],[0,0,-1]] and [[1,1,0],[0,0,1],[0,-1,-1]]";
    c.generators = {dim3_t1(), dim3_t2()};
    c.claimed_order = 6;
    return c;
}

inline AutClaim order2_claim() {
    AutClaim c;
    c.type = AutClaim::Type::Finite;
    c.statement = "automorphism group of order 2 generated by [[1,1],[0,-1]]";
    c.generators = {dim2_t()};
    c.claimed_order = 2;
    return c;
}

inline AutClaim diag_claim() {
    AutClaim c;
    c.type = AutClaim::Type::Family;
    c.statement = "automorphism group {diag(1,1,alpha^theta) : theta in Z, alpha nonzero}, tested as diag(1,1,alpha), alpha != 0";
    c.family = ParamMatrix::parse({"alpha"}, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "alpha"}}, {"alpha"});
    c.family_dim = 1;
    return c;
}

// [[1,0,0],[0,1,0],[0, s*r/2, +-sqrt(4e + s' r^2)/2]]; the root is the free parameter q != 0
// with e = (q^2 - s' r^2)/4, which parametrizes the whole family polynomially.
inline AutClaim root_claim(bool minus) {
    AutClaim c;
    c.type = AutClaim::Type::Family;
    c.statement = minus ? "automorphisms [[1,0,0],[0,1,0],[0,-r/2,+-sqrt(4e-r^2)/2]], 4e-r^2 != 0; parametrized by q = +-sqrt(4e-r^2)"
                        : "automorphisms [[1,0,0],[0,1,0],[0,r/2,+-sqrt(4e+r^2)/2]], 4e+r^2 != 0; parametrized by q = +-sqrt(4e+r^2)";
    c.family = ParamMatrix::parse({"r", "q"}, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", minus ? "-r/2" : "r/2", "q/2"}}, {"q"});
    c.family_dim = 2;
    c.named_points = {{0, 2}, {0, -2}};
    c.named_points_label = "r=0, e=1 (q=+-2)";
    return c;
}

inline std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    auto push = [&](std::size_t dim, Kind kind, std::size_t index, std::string alg, WeakStructure H,
                    std::vector<std::string> notes = {}, std::optional<AutClaim> claim = std::nullopt) {
        CatalogEntry c;
        c.dim = dim;
        c.kind = kind;
        c.index = index;
        c.algebra = std::move(alg);
        H.label = c.id();
        c.structure = std::move(H);
        c.notes = std::move(notes);
        c.claim = std::move(claim);
        out.push_back(std::move(c));
    };

    const AlgebraStruct m12 = maxlike(2, {{2, 2}});
    const AlgebraStruct m22 = maxlike(2, {});
    const AlgebraStruct m13 = maxlike(3, {});
    const AlgebraStruct m23 = maxlike(3, {{3, 3}});
    const AlgebraStruct m33 = maxlike(3, {{2, 3}, {3, 2}, {3, 3}});
    const AlgebraStruct m43 = maxlike(3, {{2, 2}, {2, 3}, {3, 2}, {3, 3}});
    const AlgebraStruct m53 = maxlike(3, {{3, 2}, {3, 3}});

    auto alg_only = [](const AlgebraStruct& A) {
        WeakStructure H(A.dim);
        H.alg = A;
        return H;
    };
    push(2, Kind::Algebra, 1, "alg2.1", alg_only(m12), {"m_1^2: e2.e2 = 0"});
    push(2, Kind::Algebra, 2, "alg2.2", alg_only(m22), {"m_2^2: e_i e_j = e_max(i,j)"});
    push(3, Kind::Algebra, 1, "alg3.1", alg_only(m13), {"m_1^3: e_i e_j = e_max(i,j)"});
    push(3, Kind::Algebra, 2, "alg3.2", alg_only(m23), {"m_2^3: as m_1^3 but e3.e3 = 0"});
    push(3, Kind::Algebra, 3, "alg3.3", alg_only(m33), {"m_3^3: e2.e3 = e3.e2 = e3.e3 = 0"});
    push(3, Kind::Algebra, 4, "alg3.4", alg_only(m43), {"m_4^3: e1 is the unit, all other products 0"});
    push(3, Kind::Algebra, 5, "alg3.5", alg_only(m53), {"m_5^3: e2.e3 = e3, e3.e2 = e3.e3 = 0"});

    {
        const TableBuilder b{2};
        const Vec e1 = b.e(1), e2 = b.e(2);
        push(2, Kind::WeakBialgebra, 1, "alg2.2", table(m22, {{{e1, e1}}, {{e2, e2}}}, {1, 1}), {}, order2_claim());
        push(2, Kind::WeakBialgebra, 2, "alg2.2", table(m22, {{{e1, e1}}, {{e1 - e2, e1 - e2}, {e2, e2}}}, {1, 1}),
             {"printed Delta(e2) = (e1-e2)(x)(e1-e2)(x) + e2(x)e2 has a dangling (x); read as (e1-e2)(x)(e1-e2) + e2(x)e2"},
             order2_claim());
        push(2, Kind::WeakBialgebra, 3, "alg2.2", table(m22, {{{e1 - e2, e1 - e2}, {e2, e2}}, {{e2, e2}}}, {2, 1}), {}, order2_claim());

        WeakStructure h1 = table(m22, {{{e1, e1}}, {{e1 - e2, e1 - e2}, {e2, e2}}}, {1, 1});
        h1.antipode = Mat::identity(2);
        WeakStructure h2 = table(m22, {{{e1 - e2, e1 - e2}, {e2, e2}}, {{e2, e2}}}, {2, 1});
        h2.antipode = Mat::identity(2);
        const std::string similar = "the 2-dimensional weak Hopf groups are stated to be 'similar' to the weak bialgebra one; checked here as the same order-2 group";
        push(2, Kind::WeakHopf, 1, "alg2.2", h1, {"underlying weak bialgebra is wba2.2", similar}, order2_claim());
        push(2, Kind::WeakHopf, 2, "alg2.2", h2, {"underlying weak bialgebra is wba2.3", similar}, order2_claim());
    }

    {
        const TableBuilder b{3};
        const Vec e1 = b.e(1), e2 = b.e(2), e3 = b.e(3);
        const std::string m5note = "labelled with m_3^3 but printed with the table e2.e3 = e3, e3.e2 = 0, e3.e3 = 0 (that is m_5^3); the printed table is used";
        auto W = [&](std::size_t i, const std::string& alg, const AlgebraStruct& A, std::vector<Terms> d, std::vector<long> f,
                     std::vector<std::string> notes, std::optional<AutClaim> c) {
            push(3, Kind::WeakBialgebra, i, alg, table(A, d, f), std::move(notes), std::move(c));
        };
        const auto o6 = order6_claim();
        W(1, "alg3.1", m13, {{{e1, e1}}, {{e1, e1 - e3}, {e2, 2 * e3 - e2}, {e3, 2 * e2 - e3 - e1}}, {{e1, e2 - e3}, {e2, e1 - 2 * e2 + e3}, {e3, e2 + e3 - e1}}},
          {1, 1, 1}, {}, o6);
        W(2, "alg3.1", m13, {{{e1, e1}}, {{e2, e2}}, {{e3, e3}}}, {1, 1, 1}, {}, o6);
        W(3, "alg3.1", m13, {{{e1, e1}}, {{e2, e2}}, {{e2 - e3, e3}, {e3, e2 - e3}}}, {1, 1, 0}, {}, o6);
        W(4, "alg3.1", m13, {{{e1, e1}}, {{e2 - e3, e3}, {e3, e2}}, {{e3, e3}}}, {1, 1, 1}, {}, o6);
        W(5, "alg3.1", m13, {{{e1, e1}}, {{e2, e2}, {e1 - e2, e3}}, {{e1 - e3, e3}, {e3, e2}}}, {1, 1, 0}, {}, o6);
        W(6, "alg3.1", m13, {{{e1, e1}}, {{e2, e2}, {e3, e1 - e2}}, {{e2, e3}, {e3, e1}, {-1 * e3, e3}}}, {1, 1, 0},
          {"printed eps(e3) = 1 fails the counit axiom ((eps(x)id)Delta(e2) = e1); transcribed eps(e3) = 0, which makes the entry the co-opposite of wba3.5"},
          o6);
        W(7, "alg3.1", m13, {{{e1, e1}}, {{e1 - e2, e1 - e2}, {e2, e2}}, {{e3, e3}}}, {1, 1, 1}, {}, o6);
        W(8, "alg3.1", m13, {{{e1 - e2, e1 - e2}, {e2, e2}}, {{e2, e2}}, {{e3, e3}}}, {2, 1, 1}, {}, o6);
        W(9, "alg3.1", m13, {{{e1 - e2, e1 - e2}, {e2, e2}}, {{e2, e2}}, {{e2 - e3, e3}, {e3, e2 - e3}}}, {2, 1, 0}, {}, o6);
        W(10, "alg3.1", m13, {{{e1 - e2, e1 - e2}, {e2 - e3, e2 - e3}, {e3, e3}}, {{e2 - e3, e2 - e3}, {e3, e3}}, {{e3, e3}}}, {3, 2, 1}, {}, o6);
        W(11, "alg3.1", m13, {{{e1, e2 - e3}, {e3, e1 - 2 * e2 + 2 * e3}}, {{e2 - e3, e2 - e3}, {e3, e3}}, {{e3, e3}}}, {2, 2, 1}, {}, o6);
        const Terms d2 = {{e1, e2}, {e2, e1}, {-1 * e2, e2}};
        const auto dg = diag_claim();
        W(12, "alg3.2", m23, {{{e1, e1}}, d2, {{e1, e3}, {e3, e1}, {-1 * e3, e2}}}, {1, 0, 0}, {}, dg);
        W(13, "alg3.2", m23, {{{e1, e1}}, d2, {{e1, e3}, {-1 * e2, e3}, {e3, e1}, {-1 * e3, e2}, {e3, e3}}}, {1, 0, 0}, {}, dg);
        W(14, "alg3.2", m23, {{{e1, e1}}, d2, {{e1, e3}, {-1 * e2, e3}, {e3, e1}}}, {1, 0, 0}, {}, dg);
        W(15, "alg3.2", m23, {{{e1, e1}}, d2, {{e1, e3}, {-1 * e3, e2}, {e3, e1}, {-1 * e2, e3}}}, {1, 0, 0}, {}, dg);
        W(16, "alg3.5", m53, {{{e1 - e2, e1 - e2}, {e2, e2}}, {{e2, e2}}, {{e3, e3}}}, {2, 1, 1}, {m5note}, dg);
        W(17, "alg3.5", m53, {{{e1, e1}}, d2, {{e1, e3}, {e3, e1}, {-1 * e2, e3}, {-1 * e3, e2}}}, {1, 0, 0}, {m5note}, dg);
        W(18, "alg3.5", m53, {{{e1, e1}}, {{e1, e2}, {e2, e1}, {-1 * e2, e2}, {-1 * e3, e3}}, {{e1, e3}, {-1 * e2, e3}, {e3, e1}, {-1 * e3, e2}}},
          {1, 0, 0}, {m5note}, root_claim(true));
        W(19, "alg3.5", m53, {{{e1, e1}}, {{e2, e2}}, {{e2, e3}, {e3, e2}}}, {1, 1, 0}, {m5note}, dg);
        W(20, "alg3.5", m53, {{{e1, e1}}, {{e2, e2}, {e3, e3}}, {{e2, e3}, {e3, e2}}}, {1, 1, 0}, {}, root_claim(false));

        WeakStructure w1 = table(m13,
                                 {{{e1, e1}},
                                  {{e1, e2}, {e2, e1}, {-1 * e2, e2}, {-1 * e2, e3}, {-1 * e3, e2}, {2 * e3, e3}},
                                  {{e1, e3}, {e2, e2}, {-2 * e2, e3}, {e3, e1}, {-2 * e3, e2}, {e3, e3}}},
                                 {1, 0, 0});
        w1.antipode = Mat{{1, 0, 0}, {0, 1, 0}, {0, 1, -1}};
        WeakStructure w2 = table(m13, {{{e1 - e2, e1 - e2}, {e2, e2}}, {{e2, e2}}, {{e2 - e3, e3}, {e3, e2 - e3}}}, {2, 1, 0});
        w2.antipode = Mat::identity(3);
        WeakStructure w3 = table(m13, {{{e1 - e2, e1 - e2}, {e2 - e3, e2 - e3}, {e3, e3}}, {{e2 - e3, e2 - e3}, {e3, e3}}, {{e3, e3}}}, {3, 2, 1});
        w3.antipode = Mat::identity(3);
        push(3, Kind::WeakHopf, 1, "alg3.1", w1, {"S(e3) = e2 - e3"}, o6);
        push(3, Kind::WeakHopf, 2, "alg3.1", w2, {"underlying weak bialgebra is wba3.9"}, o6);
        push(3, Kind::WeakHopf, 3, "alg3.1", w3, {"underlying weak bialgebra is wba3.10"}, o6);
    }
    return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline std::vector<const CatalogEntry*> catalog_entries(std::optional<std::size_t> dim = std::nullopt, std::optional<Kind> kind = std::nullopt) {
    std::vector<const CatalogEntry*> out;
    for (const auto& c : catalog())
        if ((!dim || c.dim == *dim) && (!kind || c.kind == *kind)) out.push_back(&c);
    return out;
}

inline const CatalogEntry& catalog_get(std::size_t dim, Kind kind, std::size_t index) {
    for (const auto& c : catalog())
        if (c.dim == dim && c.kind == kind && c.index == index) return c;
    throw InputError("unknown catalog entry " + std::string(kind_prefix(kind)) + std::to_string(dim) + "." + std::to_string(index));
}

/// "wba3.12" style lookup.
inline const CatalogEntry& catalog_get(const std::string& id) {
    for (const auto& c : catalog())
        if (c.id() == id) return c;
    throw InputError("unknown catalog entry '" + id + "'");
}

// ---- verification

struct CatalogVerifyLine {
    std::string id;
    Level level;
    bool pass;
    std::string witness;  // first failing axiom with residual, when failing
};

inline std::string first_failure_text(const WeakStructure& H, const VerificationReport& r) {
    for (const auto& a : r.axioms) {
        if (a.status == AxiomStatus::Pass) continue;
        if (a.status == AxiomStatus::Missing) return std::string(axiom_name(a.axiom)) + ": missing antipode";
        Residual res = residual(H, a.axiom, true);
        std::string s = axiom_name(a.axiom);
        if (const ResidualEntry* e = res.first()) s += " at " + describe(*e);
        return s;
    }
    return {};
}

inline std::vector<CatalogVerifyLine> verify_all(const std::vector<const CatalogEntry*>& entries) {
    std::vector<CatalogVerifyLine> out;
    for (const auto* c : entries) {
        const Level lv = level_for(c->kind);
        VerificationReport r = verify(c->structure, lv);
        out.push_back({c->id(), lv, r.pass(), r.pass() ? "" : first_failure_text(c->structure, r)});
    }
    return out;
}

inline std::vector<CatalogVerifyLine> verify_all() { return verify_all(catalog_entries()); }

// ---- fingerprints

struct Fingerprint {
    Scalar eps_unit;
    Scalar trace_m_delta;
    Scalar trace_m_delta_sq;
    Scalar trace_m_tau_delta;
    bool commutative = false;
    bool cocommutative = false;
    std::size_t trace_form_rank = 0;
    std::optional<std::size_t> dual_trace_form_rank;
    std::size_t delta_unit_rank = 0;
    std::optional<std::size_t> grouplike_count;
    std::vector<Scalar> grouplike_eps;  // sorted
    std::string unavailable_note;

    /// (name, value) in fixed order; unavailable components have value "unavailable".
    std::vector<std::pair<std::string, std::string>> components() const {
        std::vector<std::pair<std::string, std::string>> c;
        c.emplace_back("eps-on-unit", eps_unit.to_string());
        c.emplace_back("trace(m.Delta)", trace_m_delta.to_string());
        c.emplace_back("trace((m.Delta)^2)", trace_m_delta_sq.to_string());
        c.emplace_back("trace(m.tau.Delta)", trace_m_tau_delta.to_string());
        c.emplace_back("commutative", commutative ? "true" : "false");
        c.emplace_back("cocommutative", cocommutative ? "true" : "false");
        c.emplace_back("trace-form-rank", std::to_string(trace_form_rank));
        c.emplace_back("dual-trace-form-rank", dual_trace_form_rank ? std::to_string(*dual_trace_form_rank) : "unavailable");
        c.emplace_back("rank-Delta(1)", std::to_string(delta_unit_rank));
        if (grouplike_count) {
            std::string g = std::to_string(*grouplike_count) + " {";
            for (std::size_t i = 0; i < grouplike_eps.size(); ++i) g += (i ? ", " : "") + grouplike_eps[i].to_string();
            c.emplace_back("grouplikes", g + "}");
        } else {
            c.emplace_back("grouplikes", "unavailable");
        }
        return c;
    }

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) { return a.components() == b.components(); }
};

namespace detail {

inline Mat m_delta_matrix(const WeakStructure& H, bool flip) {
    const std::size_t n = H.dim();
    Mat M(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& d = H.coalg.comult(c, i, j);
                if (d.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r) {
                    const Scalar& m = flip ? H.alg.mult(j, i, r) : H.alg.mult(i, j, r);
                    if (!m.is_zero()) M(r, c) += d * m;
                }
            }
    return M;
}

inline bool counit_is_dual_unit(const WeakStructure& H) {
    const std::size_t n = H.dim();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar l, r;
            for (std::size_t i = 0; i < n; ++i) {
                l += H.coalg.counit[i] * H.coalg.comult(k, i, j);
                r += H.coalg.counit[i] * H.coalg.comult(k, j, i);
            }
            const Scalar want = j == k ? Scalar(1) : Scalar(0);
            if (l != want || r != want) return false;
        }
    return true;
}

}  // namespace detail

/// Transport-invariant quantities. `grid` (optional) enables grouplikes above dim 3.
inline Fingerprint fingerprint(const WeakStructure& H, const std::vector<Scalar>* grid = nullptr) {
    const std::size_t n = H.dim();
    Fingerprint f;
    f.eps_unit = counit(H, H.alg.unit);
    const Mat M = detail::m_delta_matrix(H, false);
    f.trace_m_delta = M.trace();
    f.trace_m_delta_sq = (M * M).trace();
    f.trace_m_tau_delta = detail::m_delta_matrix(H, true).trace();
    f.commutative = true;
    f.cocommutative = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                f.commutative = f.commutative && H.alg.mult(a, b, c) == H.alg.mult(b, a, c);
                f.cocommutative = f.cocommutative && H.coalg.comult(a, b, c) == H.coalg.comult(a, c, b);
            }
    f.trace_form_rank = trace_bilinear_rank(H.alg);
    if (detail::counit_is_dual_unit(H)) {
        AlgebraStruct dual(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) dual.mult(i, j, k) = H.coalg.comult(k, i, j);
        dual.unit = H.coalg.counit;
        f.dual_trace_form_rank = trace_bilinear_rank(dual);
    } else {
        f.unavailable_note = "counit is not a unit for the dual algebra";
    }
    f.delta_unit_rank = tensor2_rank(comultiply(H, H.alg.unit));
    try {
        GrouplikeResult g = grouplikes(H, grid);
        f.grouplike_count = g.elements.size();
        f.grouplike_eps = g.counits;
        std::sort(f.grouplike_eps.begin(), f.grouplike_eps.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
    } catch (const Error& e) {
        if (!f.unavailable_note.empty()) f.unavailable_note += "; ";
        f.unavailable_note += std::string(e.what());
    }
    return f;
}

/// First component on which a and b differ (both available), if any.
inline std::optional<std::string> separating_component(const Fingerprint& a, const Fingerprint& b) {
    const auto ca = a.components(), cb = b.components();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].second == "unavailable" || cb[i].second == "unavailable") continue;
        if (ca[i].second != cb[i].second) return ca[i].first;
    }
    return std::nullopt;
}

struct SeparationCell {
    std::string a, b;
    std::optional<std::string> component;  // nullopt: inconclusive
    std::string value_a, value_b;
};

struct SeparationReport {
    std::vector<std::string> ids;
    std::vector<SeparationCell> pairs;  // i < j, row-major
    std::vector<std::pair<std::string, std::string>> inconclusive() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& p : pairs)
            if (!p.component) out.emplace_back(p.a, p.b);
        return out;
    }
};

inline SeparationReport pairwise_separation(const std::vector<std::pair<std::string, WeakStructure>>& items) {
    SeparationReport r;
    std::vector<Fingerprint> fps;
    for (const auto& [id, H] : items) {
        r.ids.push_back(id);
        fps.push_back(fingerprint(H));
    }
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            SeparationCell cell{r.ids[i], r.ids[j], separating_component(fps[i], fps[j]), "", ""};
            if (cell.component)
                for (const auto& [name, v] : fps[i].components())
                    if (name == *cell.component) cell.value_a = v;
            if (cell.component)
                for (const auto& [name, v] : fps[j].components())
                    if (name == *cell.component) cell.value_b = v;
            r.pairs.push_back(std::move(cell));
        }
    return r;
}

inline SeparationReport pairwise_separation(std::size_t dim, Kind kind) {
    std::vector<std::pair<std::string, WeakStructure>> items;
    for (const auto* c : catalog_entries(dim, kind)) items.emplace_back(c->id(), c->structure);
    return pairwise_separation(items);
}

/// Catalog weak bialgebras / weak Hopf algebras of the same dim with an equal fingerprint.
inline std::vector<std::string> fingerprint_matches(const Fingerprint& fp, std::size_t dim, Kind kind = Kind::WeakBialgebra) {
    std::vector<std::string> out;
    for (const auto* c : catalog_entries(dim, kind))
        if (fingerprint(c->structure) == fp) out.push_back(c->id());
    return out;
}

// ---- claims

enum class ClaimStatus { Confirmed, Refuted, Inconclusive };

inline const char* claim_status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Confirmed: return "confirmed";
        case ClaimStatus::Refuted: return "refuted";
        default: return "inconclusive";
    }
}

struct GeneratorCheck {
    std::string matrix;
    bool automorphism = false;
    std::string witness;  // failing equation, when not an automorphism
};

struct ClaimReport {
    std::string id;
    std::string statement;
    Convention convention = Convention::Columns;
    ClaimStatus status = ClaimStatus::Inconclusive;
    std::vector<GeneratorCheck> generators;
    std::optional<std::size_t> computed_order;  // finite claims
    std::size_t claimed_order = 0;
    std::optional<ParamResult> family;
    std::optional<ParamResult> named;
    std::string named_label;
    TangentResult tangent;
    std::size_t expected_tangent = 0;
    std::vector<std::string> reasons;
};

inline std::string matrix_text(const Mat& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
        s += "]";
    }
    return s + "]";
}

inline std::string point_text(const std::vector<std::string>& names, const std::vector<Rational>& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + names[i] + "=" + x[i].get_str();
    return s;
}

inline ClaimReport check_claim(const CatalogEntry& c, Convention conv = Convention::Columns, std::size_t family_samples = 5) {
    if (!c.claim) throw InputError(c.id() + " carries no automorphism claim");
    const AutClaim& cl = *c.claim;
    ClaimReport r;
    r.id = c.id();
    r.statement = cl.statement;
    r.convention = conv;
    r.tangent = stabilizer_tangent_dim(c.structure);
    bool refuted = false;
    if (cl.type == AutClaim::Type::Finite) {
        r.claimed_order = cl.claimed_order;
        r.expected_tangent = 0;
        for (const auto& g : cl.generators) {
            WitnessResult w = is_automorphism(c.structure, BasisChange::from(g, conv));
            r.generators.push_back({matrix_text(g), w.pass, w.pass ? "" : w.failure->describe()});
            if (!w.pass) {
                refuted = true;
                r.reasons.push_back("generator " + matrix_text(g) + " is not an automorphism: " + w.failure->describe());
            }
        }
        std::vector<Mat> gens;
        for (const auto& g : cl.generators) gens.push_back(conv == Convention::Columns ? g : g.transpose());
        r.computed_order = group_closure(gens, 1000).order();
        if (*r.computed_order != cl.claimed_order) {
            refuted = true;
            r.reasons.push_back("generated group has order " + std::to_string(*r.computed_order) + ", claimed " + std::to_string(cl.claimed_order));
        }
        if (r.tangent.tangent_dim != 0) {
            refuted = true;
            r.reasons.push_back("stabilizer tangent dimension is " + std::to_string(r.tangent.tangent_dim) + ", so the automorphism group is infinite");
        }
    } else {
        ParamMatrix P = *cl.family;
        P.convention = conv;
        r.expected_tangent = cl.family_dim;
        r.family = check_parametric_automorphism(c.structure, P, family_samples);
        if (r.family->verdict == Verdict::Fail) {
            refuted = true;
            const ParamPoint* p = r.family->first_failure();
            r.reasons.push_back("family member at " + point_text(P.params, p->values) + " is not an automorphism: " + p->failure->describe());
        }
        if (!cl.named_points.empty()) {
            r.named = check_parametric_at(c.structure, P, cl.named_points);
            r.named_label = cl.named_points_label;
        }
        if (r.tangent.tangent_dim < cl.family_dim) {
            refuted = true;
            r.reasons.push_back("stabilizer tangent dimension is " + std::to_string(r.tangent.tangent_dim) + ", below the family dimension " +
                                std::to_string(cl.family_dim));
        } else if (r.tangent.tangent_dim > cl.family_dim) {
            refuted = true;
            r.reasons.push_back("stabilizer tangent dimension is " + std::to_string(r.tangent.tangent_dim) + ", so the group is larger than the family");
        }
        if (r.family->verdict == Verdict::Inconclusive && !refuted) {
            r.status = ClaimStatus::Inconclusive;
            r.reasons.push_back(r.family->explanation);
            return r;
        }
    }
    r.status = refuted ? ClaimStatus::Refuted : ClaimStatus::Confirmed;
    return r;
}

inline std::vector<ClaimReport> verify_claims(std::size_t dim, Kind kind, Convention conv = Convention::Columns) {
    std::vector<ClaimReport> out;
    for (const auto* c : catalog_entries(dim, kind))
        if (c->claim) out.push_back(check_claim(*c, conv));
    return out;
}

}  // namespace wha
