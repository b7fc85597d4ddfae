#pragma once

// Grid enumeration of weak bialgebra structures on a fixed algebra: every D_k^{i,j} and f_k
// ranges over a finite coefficient set. Pipeline: counit constraints per row k (linear,
// exact), then coassociativity, multiplicativity of Delta, weak unit and weak counit
// identities on the product of surviving rows.

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "wha/catalog.hpp"

namespace wha {

struct SearchSpec {
    std::string algebra = "alg2.2";                   // catalog algebra id
    std::vector<Scalar> coeffs = {-1, 0, 1, 2};
    std::map<std::string, Scalar> freeze;             // "f[k]" / "D[k,i,j]" (1-based) -> value
    double budget = 1e8;
    double count_budget = 1e7;                        // limit on row checks spent computing the estimate
    bool prune = true;                                // false: brute force the full grid
    unsigned threads = 1;
};

/// Variable names in assignment order: D[k,i,j] for k,i,j = 1..n, then f[1..n].
inline std::vector<std::string> search_variables(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) v.push_back("D[" + std::to_string(k) + "," + std::to_string(i) + "," + std::to_string(j) + "]");
    for (std::size_t k = 1; k <= n; ++k) v.push_back("f[" + std::to_string(k) + "]");
    return v;
}

/// "f[1]=2; D[1,2,2]=0" (also accepts ',' between items outside brackets).
inline std::map<std::string, Scalar> parse_freeze(const std::string& text) {
    std::map<std::string, Scalar> out;
    std::string item;
    int depth = 0;
    auto flush = [&]() {
        std::string s;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        item.clear();
        if (s.empty()) return;
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("freeze item '" + s + "' needs name=value");
        out[s.substr(0, eq)] = Scalar::parse(s.substr(eq + 1));
    };
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if ((c == ';' || c == ',') && depth == 0) flush();
        else item += c;
    }
    flush();
    return out;
}

struct SearchEstimate {
    std::size_t dim = 0;
    std::size_t free_variables = 0;
    mpz_class pre_prune;   // |coeffs|^free
    mpz_class post_prune;  // exact number of candidates surviving the counit constraints
    bool post_computed = false;
    std::string note;
};

struct SearchSurvivor {
    std::vector<std::size_t> key;  // per-variable index into coeffs, frozen variables as SIZE_MAX
    WeakStructure structure;
};

struct SearchClass {
    Fingerprint fingerprint;
    std::vector<std::size_t> members;  // indices into survivors
    std::vector<std::string> catalog_matches;
};

struct SearchResult {
    SearchEstimate estimate;
    std::size_t after_counit = 0, after_coassoc = 0, after_compat = 0, after_weak = 0;
    std::vector<SearchSurvivor> survivors;
    std::vector<SearchClass> classes;
    bool all_reverified = true;
};

namespace detail {

struct SearchSetup {
    std::size_t n = 0;
    AlgebraStruct alg;
    std::vector<std::optional<Scalar>> frozen;  // per variable
    std::vector<Scalar> coeffs;
};

inline SearchSetup search_setup(const SearchSpec& spec) {
    const CatalogEntry& e = catalog_get(spec.algebra);
    if (e.kind != Kind::Algebra) throw InputError("search base must be a catalog algebra entry (alg*)");
    if (spec.coeffs.empty()) throw InputError("coefficient set is empty");
    SearchSetup s;
    s.n = e.dim;
    s.alg = e.structure.alg;
    s.coeffs = spec.coeffs;
    std::sort(s.coeffs.begin(), s.coeffs.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
    s.coeffs.erase(std::unique(s.coeffs.begin(), s.coeffs.end()), s.coeffs.end());
    const auto names = search_variables(s.n);
    s.frozen.assign(names.size(), std::nullopt);
    for (const auto& [k, v] : spec.freeze) {
        auto it = std::find(names.begin(), names.end(), k);
        if (it == names.end()) throw InputError("unknown freeze variable '" + k + "'");
        s.frozen[static_cast<std::size_t>(it - names.begin())] = v;
    }
    return s;
}

inline std::size_t var_D(std::size_t n, std::size_t k, std::size_t i, std::size_t j) { return (k * n + i) * n + j; }
inline std::size_t var_f(std::size_t n, std::size_t k) { return n * n * n + k; }

// Odometer over the free variables among `vars`; calls fn(indices) with SIZE_MAX for frozen.
template <class Fn>
void odometer(const SearchSetup& s, const std::vector<std::size_t>& vars, Fn&& fn) {
    std::vector<std::size_t> idx(vars.size(), 0);
    std::vector<std::size_t> free;
    for (std::size_t t = 0; t < vars.size(); ++t) {
        if (s.frozen[vars[t]]) idx[t] = SIZE_MAX;
        else free.push_back(t);
    }
    while (true) {
        fn(idx);
        std::size_t p = free.size();
        while (p > 0) {
            --p;
            if (++idx[free[p]] < s.coeffs.size()) break;
            idx[free[p]] = 0;
            if (p == 0) return;
        }
        if (free.empty()) return;
    }
}

inline Scalar value_of(const SearchSetup& s, std::size_t var, std::size_t idx) { return idx == SIZE_MAX ? *s.frozen[var] : s.coeffs[idx]; }

struct FChoice {
    std::vector<std::size_t> fkey;
    Vec f;
    std::vector<std::vector<std::vector<std::size_t>>> rows;  // per k: row keys (n^2 entries)
};

// Rows D_k passing (eps(x)id)Delta(e_k) = e_k = (id(x)eps)Delta(e_k) for this f.
inline std::vector<std::vector<std::size_t>> counit_rows(const SearchSetup& s, const Vec& f, std::size_t k) {
    const std::size_t n = s.n;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) vars.push_back(var_D(n, k, i, j));
    std::vector<std::vector<std::size_t>> out;
    std::vector<Scalar> d(n * n);
    odometer(s, vars, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t t = 0; t < vars.size(); ++t) d[t] = value_of(s, vars[t], idx[t]);
        for (std::size_t j = 0; j < n; ++j) {
            Scalar l, r;
            for (std::size_t i = 0; i < n; ++i) {
                l += f[i] * d[i * n + j];
                r += f[i] * d[j * n + i];
            }
            const bool diag = j == k;
            if (l != Scalar(diag ? 1 : 0) || r != Scalar(diag ? 1 : 0)) return;
        }
        out.push_back(idx);
    });
    return out;
}

inline std::vector<FChoice> f_choices(const SearchSetup& s, bool with_rows) {
    const std::size_t n = s.n;
    std::vector<std::size_t> vars;
    for (std::size_t k = 0; k < n; ++k) vars.push_back(var_f(n, k));
    std::vector<FChoice> out;
    odometer(s, vars, [&](const std::vector<std::size_t>& idx) {
        FChoice c;
        c.fkey = idx;
        c.f = Vec(n);
        for (std::size_t k = 0; k < n; ++k) c.f[k] = value_of(s, vars[k], idx[k]);
        if (with_rows)
            for (std::size_t k = 0; k < n; ++k) c.rows.push_back(counit_rows(s, c.f, k));
        out.push_back(std::move(c));
    });
    return out;
}

inline mpz_class mpz_pow(std::size_t base, std::size_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

}  // namespace detail

inline SearchEstimate estimate(const SearchSpec& spec) {
    const detail::SearchSetup s = detail::search_setup(spec);
    const std::size_t n = s.n;
    SearchEstimate e;
    e.dim = n;
    for (const auto& fr : s.frozen)
        if (!fr) ++e.free_variables;
    e.pre_prune = detail::mpz_pow(s.coeffs.size(), e.free_variables);
    // cost of the exact per-row count: (#f choices) * n * |coeffs|^(free entries per row)
    std::size_t free_f = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (!s.frozen[detail::var_f(n, k)]) ++free_f;
    mpz_class row_cost = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t free_row = 0;
        for (std::size_t i = 0; i < n * n; ++i)
            if (!s.frozen[detail::var_D(n, k, i / n, i % n)]) ++free_row;
        row_cost += detail::mpz_pow(s.coeffs.size(), free_row);
    }
    row_cost *= detail::mpz_pow(s.coeffs.size(), free_f);
    if (row_cost > mpz_class(static_cast<unsigned long>(std::min(spec.budget, spec.count_budget)))) {
        e.note = "counting the counit-feasible rows alone costs " + row_cost.get_str() + " checks, over budget; freeze more variables";
        return e;
    }
    e.post_prune = 0;
    for (const auto& c : detail::f_choices(s, true)) {
        mpz_class p = 1;
        for (const auto& r : c.rows) p *= static_cast<unsigned long>(r.size());
        e.post_prune += p;
    }
    e.post_computed = true;
    return e;
}

namespace detail {

inline WeakStructure assemble(const SearchSetup& s, const FChoice& c, const std::vector<const std::vector<std::size_t>*>& rows,
                              std::vector<std::size_t>& key) {
    const std::size_t n = s.n;
    WeakStructure H(n);
    H.alg = s.alg;
    key.assign(n * n * n + n, SIZE_MAX);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n * n; ++t) {
            const std::size_t v = var_D(n, k, t / n, t % n);
            key[v] = (*rows[k])[t];
            H.coalg.comult(k, t / n, t % n) = value_of(s, v, key[v]);
        }
    for (std::size_t k = 0; k < n; ++k) {
        key[var_f(n, k)] = c.fkey[k];
        H.coalg.counit[k] = c.f[k];
    }
    return H;
}

struct StageCounts {
    std::size_t counit = 0, coassoc = 0, compat = 0, weak = 0;
};

inline bool run_stages(const WeakStructure& H, StageCounts& st) {
    ++st.counit;
    if (!residual(H, AxiomId::COASSOC, true).pass()) return false;
    ++st.coassoc;
    if (!residual(H, AxiomId::COMPAT, true).pass()) return false;
    ++st.compat;
    for (AxiomId a : {AxiomId::WEAK_UNIT_A, AxiomId::WEAK_UNIT_B, AxiomId::WEAK_COUNIT_A, AxiomId::WEAK_COUNIT_B})
        if (!residual(H, a, true).pass()) return false;
    ++st.weak;
    return true;
}

}  // namespace detail

inline SearchResult enumerate(const SearchSpec& spec) {
    const detail::SearchSetup s = detail::search_setup(spec);
    const std::size_t n = s.n;
    SearchResult res;
    res.estimate = estimate(spec);
    const double budget = spec.budget;
    if (spec.prune) {
        if (!res.estimate.post_computed) throw BudgetExceeded(res.estimate.note + " (pre-prune " + res.estimate.pre_prune.get_str() + ")");
        if (res.estimate.post_prune > mpz_class(static_cast<unsigned long>(budget)))
            throw BudgetExceeded("search over budget: " + res.estimate.post_prune.get_str() + " candidates after counit pruning (pre-prune " +
                                 res.estimate.pre_prune.get_str() + ")");
    } else if (res.estimate.pre_prune > mpz_class(static_cast<unsigned long>(budget))) {
        throw BudgetExceeded("brute force over budget: " + res.estimate.pre_prune.get_str() + " candidates");
    }

    std::vector<detail::FChoice> fs = detail::f_choices(s, spec.prune);
    if (!spec.prune) {
        // every row of the full grid, no counit filter
        for (auto& c : fs)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<std::size_t> vars;
                for (std::size_t t = 0; t < n * n; ++t) vars.push_back(detail::var_D(n, k, t / n, t % n));
                std::vector<std::vector<std::size_t>> rows;
                detail::odometer(s, vars, [&](const std::vector<std::size_t>& idx) { rows.push_back(idx); });
                c.rows.push_back(std::move(rows));
            }
    }

    std::mutex mu;
    std::vector<SearchSurvivor> survivors;
    detail::StageCounts total;
    auto worker = [&](std::size_t start, std::size_t step) {
        detail::StageCounts st;
        std::vector<SearchSurvivor> local;
        for (std::size_t ci = start; ci < fs.size(); ci += step) {
            const auto& c = fs[ci];
            bool empty = false;
            for (const auto& r : c.rows) empty = empty || r.empty();
            if (empty) continue;
            std::vector<std::size_t> pick(n, 0);
            std::vector<const std::vector<std::size_t>*> rows(n);
            std::vector<std::size_t> key;
            while (true) {
                for (std::size_t k = 0; k < n; ++k) rows[k] = &c.rows[k][pick[k]];
                WeakStructure H = detail::assemble(s, c, rows, key);
                bool ok;
                if (spec.prune) {
                    ok = detail::run_stages(H, st);
                } else {
                    ok = satisfies(H, Level::WeakBialgebra);
                    if (ok) ++st.weak;
                }
                if (ok) local.push_back({key, std::move(H)});
                std::size_t p = n;
                bool done = false;
                while (true) {
                    if (p == 0) {
                        done = true;
                        break;
                    }
                    --p;
                    if (++pick[p] < c.rows[p].size()) break;
                    pick[p] = 0;
                }
                if (done) break;
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        total.counit += st.counit;
        total.coassoc += st.coassoc;
        total.compat += st.compat;
        total.weak += st.weak;
        for (auto& x : local) survivors.push_back(std::move(x));
    };
    const unsigned threads = std::max(1u, spec.threads);
    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
        for (auto& t : pool) t.join();
    }
    std::sort(survivors.begin(), survivors.end(), [](const SearchSurvivor& a, const SearchSurvivor& b) { return a.key < b.key; });
    res.survivors = std::move(survivors);
    res.after_counit = total.counit;
    res.after_coassoc = total.coassoc;
    res.after_compat = total.compat;
    res.after_weak = total.weak;

    const CatalogEntry& base = catalog_get(spec.algebra);
    for (std::size_t i = 0; i < res.survivors.size(); ++i) {
        auto& sv = res.survivors[i];
        sv.structure.label = "search-" + spec.algebra + "-" + std::to_string(i + 1);
        if (!satisfies(sv.structure, Level::WeakBialgebra)) res.all_reverified = false;
        Fingerprint fp = fingerprint(sv.structure);
        auto it = std::find_if(res.classes.begin(), res.classes.end(), [&](const SearchClass& c) { return c.fingerprint == fp; });
        if (it == res.classes.end()) {
            res.classes.push_back({fp, {i}, fingerprint_matches(fp, base.dim)});
        } else {
            it->members.push_back(i);
        }
    }
    return res;
}

}  // namespace wha
