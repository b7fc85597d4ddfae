#pragma once

// Name resolution shared by the command line, the docs generator and the tests:
// structure references ("catalog:wba3.6", "sweedler5", "taft:3", a file path),
// base algebras for the constructions ("null:2", "zmod:3", ...) and construction by name.

#include <functional>
#include <map>
#include <string>

#include "wha/catalog.hpp"
#include "wha/constructions.hpp"
#include "wha/io.hpp"

namespace wha {

namespace detail {

inline std::size_t ref_number(const std::string& ref, const std::string& prefix) {
    const std::string tail = ref.substr(prefix.size());
    if (tail.empty() || tail.size() > 4 || !std::all_of(tail.begin(), tail.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InputError("'" + ref + "': expected a small integer after '" + prefix + "'");
    return std::stoul(tail);
}

inline bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace detail

/// The algebra with all products zero: not unital, and its basis is not a semigroup basis.
inline RawAlgebra null_algebra(std::size_t n) { return RawAlgebra(n); }

/// Group algebra of Z/k on g^0..g^{k-1}; a semigroup basis with unit g^0.
inline RawAlgebra cyclic_group_algebra(std::size_t k) {
    RawAlgebra A(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) A.mult(i, j, (i + j) % k) = 1;
    A.unit = Vec::basis(k, 0);
    return A;
}

/// Resolve a structure reference: catalog:<id>, a built-in name, or a structure file.
inline WeakStructure resolve_structure(const std::string& ref) {
    using detail::ref_number;
    using detail::starts_with;
    if (starts_with(ref, "catalog:")) return catalog_get(ref.substr(8)).structure;
    if (ref == "sweedler4") return sweedler4();
    if (ref == "sweedler5") return sweedler5();
    if (starts_with(ref, "taft-weak:")) return taft_weak_hopf(ref_number(ref, "taft-weak:"));
    if (starts_with(ref, "taft:")) return taft_hopf(ref_number(ref, "taft:"));
    if (starts_with(ref, "group:")) return group_bialgebra(ref_number(ref, "group:"));
    if (starts_with(ref, "max:")) return max_algebra_whopf(ref_number(ref, "max:"));
    return load_structure(ref);
}

/// Base algebra for a construction: null:N, zmod:K, or anything resolve_structure takes.
inline RawAlgebra resolve_algebra(const std::string& ref) {
    if (detail::starts_with(ref, "null:")) return null_algebra(detail::ref_number(ref, "null:"));
    if (detail::starts_with(ref, "zmod:")) return cyclic_group_algebra(detail::ref_number(ref, "zmod:"));
    if (detail::starts_with(ref, "catalog:") || ref.find(':') != std::string::npos || ref == "sweedler4" || ref == "sweedler5")
        return RawAlgebra::from(resolve_structure(ref).alg);
    return RawAlgebra::from(load_structure(ref, false).alg);
}

struct ConstructRequest {
    std::string name;
    std::size_t n = 0;          // size parameter (dimension, p, group order, Taft n)
    std::size_t split = 0;      // orthogonal-idempotents: index k of the idempotent split in Delta(1), 1-based
    std::size_t idempotent = 0; // weak-from-idempotent: basis index of e, 1-based
    std::string base;           // base algebra / bialgebra reference
    bool antipode = false;      // two-unit variants: attach the antipode
    bool skip_semigroup_check = false;
};

struct Built {
    WeakStructure structure;
    Level promised;
};

struct ConstructionInfo {
    std::string name;
    std::string usage;
    std::string summary;
};

inline const std::vector<ConstructionInfo>& construction_names() {
    static const std::vector<ConstructionInfo> v = {
        {"adjoin-two-units", "--base ALG", "A + span{1, e}, Delta(1) = (1-e)(x)(1-e) + e(x)e, Delta(a) = a(x)a, eps(1) = 2"},
        {"weak-from-idempotent", "--base ALG --idempotent I", "weak bialgebra from a relative unit e of a unital algebra"},
        {"orthogonal-idempotents", "N --split K", "1, e2..eN orthogonal idempotents, Delta(1) split at eK"},
        {"chain", "P --base ALG", "chain e1..eP over a semigroup-basis algebra, eps(e_i) = P - i + 1"},
        {"max-algebra", "N", "e_i e_j = e_max(i,j) with the chain coalgebra and S = id"},
        {"adjoin-unit-bialgebra", "--base BIALG", "B + span{1}, weak bialgebra from a bialgebra"},
        {"adjoin-unit-hopf", "--base HOPF", "B + span{1}, weak Hopf algebra from a Hopf algebra"},
        {"variant-a", "--base BIALG [--antipode]", "two-unit variant a"},
        {"variant-b", "--base BIALG [--antipode]", "two-unit variant b"},
        {"group-bialgebra", "K", "group Hopf algebra of Z/K"},
        {"taft-hopf", "N", "Taft Hopf algebra of dimension N^2 (needs zeta_N)"},
        {"taft-weak-hopf", "N", "Taft algebra with one adjoined unit, dimension N^2 + 1"},
        {"sweedler4", "", "Sweedler's 4-dimensional Hopf algebra"},
        {"sweedler5", "", "Sweedler's 4-dimensional Hopf algebra with one adjoined unit"},
    };
    return v;
}

inline Built construct(const ConstructRequest& r) {
    BuildOptions opt;
    opt.require_semigroup_basis = !r.skip_semigroup_check;
    auto need_n = [&] {
        if (r.n == 0) throw InputError(r.name + ": missing size argument");
        return r.n;
    };
    auto need_base = [&] {
        if (r.base.empty()) throw InputError(r.name + ": missing --base");
        return r.base;
    };
    const std::string& nm = r.name;
    if (nm == "adjoin-two-units") return {adjoin_two_units(resolve_algebra(need_base()), opt), Level::WeakBialgebra};
    if (nm == "weak-from-idempotent") {
        if (r.idempotent == 0) throw InputError("weak-from-idempotent: missing --idempotent");
        WeakStructure B = resolve_structure(need_base());
        if (r.idempotent > B.dim()) throw InputError("weak-from-idempotent: --idempotent out of range");
        return {weak_from_idempotent(B.alg, Vec::basis(B.dim(), r.idempotent - 1), opt), Level::WeakBialgebra};
    }
    if (nm == "orthogonal-idempotents") {
        if (r.split == 0) throw InputError("orthogonal-idempotents: missing --split");
        return {orthogonal_idempotents(need_n(), r.split), Level::WeakBialgebra};
    }
    if (nm == "chain") return {chain_construction(need_n(), resolve_algebra(need_base()), opt), Level::WeakBialgebra};
    if (nm == "max-algebra") return {max_algebra_whopf(need_n()), Level::WeakHopf};
    if (nm == "adjoin-unit-bialgebra") return {adjoin_unit_to_bialgebra(resolve_structure(need_base())), Level::WeakBialgebra};
    if (nm == "adjoin-unit-hopf") return {adjoin_unit_to_hopf(resolve_structure(need_base())), Level::WeakHopf};
    if (nm == "variant-a" || nm == "variant-b") {
        WeakStructure B = resolve_structure(need_base());
        WeakStructure H = nm == "variant-a" ? two_unit_variant_a(B, r.antipode) : two_unit_variant_b(B, r.antipode);
        return {H, r.antipode ? Level::WeakHopf : Level::WeakBialgebra};
    }
    if (nm == "group-bialgebra") return {group_bialgebra(need_n()), Level::StrictHopf};
    if (nm == "taft-hopf") return {taft_hopf(need_n()), Level::StrictHopf};
    if (nm == "taft-weak-hopf") return {taft_weak_hopf(need_n()), Level::WeakHopf};
    if (nm == "sweedler4") return {sweedler4(), Level::StrictHopf};
    if (nm == "sweedler5") return {sweedler5(), Level::WeakHopf};
    throw InputError("unknown construction '" + nm + "'");
}

}  // namespace wha
