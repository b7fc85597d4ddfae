#pragma once

// JSON and text renderings of every report type. JSON uses ordered keys and string scalars
// only, so parse + dump(2) reproduces a report byte for byte.

#include <sstream>
#include <string>

#include "wha/io.hpp"
#include "wha/search.hpp"

namespace wha {

namespace detail {

inline Json indices_json(const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (auto i : v) a.push_back(i + 1);
    return a;
}

inline Json rationals_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

}  // namespace detail

inline Json to_json(const ResidualEntry& e) {
    Json j;
    j["input"] = detail::indices_json(e.input);
    j["component"] = detail::indices_json(e.component);
    j["lhs"] = e.lhs.to_string();
    j["rhs"] = e.rhs.to_string();
    return j;
}

inline Json to_json(const VerificationReport& r) {
    Json j;
    j["report"] = "verify";
    j["label"] = r.label;
    j["dim"] = r.dim;
    j["level"] = level_name(r.level);
    j["pass"] = r.pass();
    Json ax = Json::array();
    for (const auto& a : r.axioms) {
        Json x;
        x["axiom"] = axiom_name(a.axiom);
        x["status"] = status_name(a.status);
        x["evaluated"] = a.residual.evaluated;
        x["nonzero"] = a.residual.nonzero;
        x["max_residual"] = a.residual.max_residual().to_string();
        if (const ResidualEntry* e = a.residual.first()) x["witness"] = to_json(*e);
        if (!a.note.empty()) x["note"] = a.note;
        ax.push_back(x);
    }
    j["axioms"] = ax;
    return j;
}

inline Json to_json(const CrossCheckReport& r) {
    Json j;
    j["report"] = "cross-check";
    j["label"] = r.label;
    j["consistent"] = r.consistent();
    Json lines = Json::array();
    for (const auto& l : r.lines)
        lines.push_back({{"equation", sc_name(l.eq)}, {"axiom", axiom_name(l.axiom)}, {"map_pass", l.map_pass}, {"sc_pass", l.sc_pass}});
    j["lines"] = lines;
    return j;
}

inline Json to_json(const Fingerprint& f) {
    Json j;
    for (const auto& [k, v] : f.components()) j[k] = v;
    if (!f.unavailable_note.empty()) j["note"] = f.unavailable_note;
    return j;
}

inline Json to_json(const SeparationReport& r) {
    Json j;
    j["report"] = "separation";
    j["ids"] = r.ids;
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        Json x;
        x["a"] = p.a;
        x["b"] = p.b;
        if (p.component) {
            x["separated_by"] = *p.component;
            x["values"] = {p.value_a, p.value_b};
        } else {
            x["separated_by"] = nullptr;
            x["status"] = "inconclusive";
        }
        pairs.push_back(x);
    }
    j["pairs"] = pairs;
    Json inc = Json::array();
    for (const auto& [a, b] : r.inconclusive()) inc.push_back({a, b});
    j["inconclusive"] = inc;
    return j;
}

inline Json to_json(const WitnessResult& w) {
    Json j;
    j["pass"] = w.pass;
    j["equations_checked"] = w.equations;
    if (w.failure) {
        j["failure"] = {{"family", w.failure->family},
                        {"index", detail::indices_json(w.failure->index)},
                        {"lhs", w.failure->lhs.to_string()},
                        {"rhs", w.failure->rhs.to_string()},
                        {"equation", w.failure->describe()}};
    }
    return j;
}

inline Json to_json(const ParamResult& r, const std::vector<std::string>& names) {
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    j["whole_family"] = r.whole_family;
    j["grid"] = r.grid;
    j["skipped"] = r.skipped;
    j["explanation"] = r.explanation;
    Json pts = Json::array();
    for (const auto& p : r.points) {
        Json x;
        Json vals;
        for (std::size_t i = 0; i < p.values.size(); ++i) vals[names[i]] = p.values[i].get_str();
        x["at"] = vals;
        x["pass"] = p.pass;
        if (p.failure) x["equation"] = p.failure->describe();
        pts.push_back(x);
    }
    j["points"] = pts;
    return j;
}

inline Json to_json(const TangentResult& t) {
    Json j;
    j["n"] = t.n;
    j["tangent_dim"] = t.tangent_dim;
    j["orbit_dim"] = t.orbit_dim;
    Json basis = Json::array();
    for (const auto& X : t.kernel_basis) basis.push_back(matrix_to_json(X));
    j["kernel_basis"] = basis;
    return j;
}

inline Json to_json(const GroupClosure& g) {
    Json j;
    j["order"] = g.order();
    Json el = Json::array();
    for (const auto& m : g.elements) el.push_back(matrix_to_json(m));
    j["elements"] = el;
    return j;
}

inline Json to_json(const ClaimReport& r) {
    Json j;
    j["id"] = r.id;
    j["claim"] = r.statement;
    j["convention"] = convention_name(r.convention);
    j["status"] = claim_status_name(r.status);
    if (!r.generators.empty()) {
        Json g = Json::array();
        for (const auto& x : r.generators) {
            Json y{{"matrix", x.matrix}, {"automorphism", x.automorphism}};
            if (!x.witness.empty()) y["witness"] = x.witness;
            g.push_back(y);
        }
        j["generators"] = g;
    }
    if (r.computed_order) {
        j["claimed_order"] = r.claimed_order;
        j["computed_order"] = *r.computed_order;
    }
    static const std::vector<std::string> alpha{"alpha"}, rq{"r", "q"};
    const auto& names = r.family && !r.family->points.empty() && r.family->points[0].values.size() == 2 ? rq : alpha;
    if (r.family) j["family"] = to_json(*r.family, names);
    if (r.named) {
        j["named_points"] = to_json(*r.named, rq);
        j["named_points"]["label"] = r.named_label;
    }
    j["tangent_dim"] = r.tangent.tangent_dim;
    j["orbit_dim"] = r.tangent.orbit_dim;
    j["expected_tangent_dim"] = r.expected_tangent;
    j["reasons"] = r.reasons;
    return j;
}

inline Json to_json(const std::vector<ClaimReport>& rs, std::size_t dim, Kind kind) {
    Json j;
    j["report"] = "claims";
    j["dim"] = dim;
    j["kind"] = kind_name(kind);
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(to_json(r));
    j["entries"] = a;
    return j;
}

inline Json to_json(const SearchEstimate& e) {
    Json j;
    j["dim"] = e.dim;
    j["free_variables"] = e.free_variables;
    j["pre_prune"] = e.pre_prune.get_str();
    j["post_prune"] = e.post_computed ? Json(e.post_prune.get_str()) : Json(nullptr);
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

inline Json to_json(const SearchResult& r, const SearchSpec& spec) {
    Json j;
    j["report"] = "search";
    j["algebra"] = spec.algebra;
    Json cs = Json::array();
    for (const auto& c : spec.coeffs) cs.push_back(c.to_string());
    j["coeffs"] = cs;
    Json fr = Json::object();
    for (const auto& [k, v] : spec.freeze) fr[k] = v.to_string();
    j["freeze"] = fr;
    j["estimate"] = to_json(r.estimate);
    j["stages"] = {{"after_counit", r.after_counit}, {"after_coassoc", r.after_coassoc}, {"after_compat", r.after_compat}, {"after_weak", r.after_weak}};
    j["survivors"] = r.survivors.size();
    j["reverified"] = r.all_reverified;
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        Json x;
        x["fingerprint"] = to_json(c.fingerprint);
        x["members"] = detail::indices_json(c.members);
        x["catalog_matches"] = c.catalog_matches;
        classes.push_back(x);
    }
    j["classes"] = classes;
    return j;
}

// ---- text

namespace detail {

inline void text_walk(const Json& j, std::ostringstream& out, int indent, const std::string& key) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    if (j.is_object()) {
        if (!key.empty()) out << pad << key << ":\n";
        for (auto it = j.begin(); it != j.end(); ++it) text_walk(*it, out, key.empty() ? indent : indent + 1, it.key());
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& v : j) flat = flat && !v.is_object() && !(v.is_array() && !v.empty() && v[0].is_object());
        if (flat) {
            std::string s;
            for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + (j[i].is_array() ? j[i].dump() : scalar(j[i]));
            out << pad << key << ": [" << s << "]\n";
        } else {
            out << pad << key << ":\n";
            for (std::size_t i = 0; i < j.size(); ++i) text_walk(j[i], out, indent + 1, "- " + std::to_string(i + 1));
        }
    } else {
        out << pad << key << ": " << scalar(j) << "\n";
    }
}

}  // namespace detail

/// Indented key/value rendering of a JSON report.
inline std::string to_text(const Json& j) {
    std::ostringstream out;
    detail::text_walk(j, out, 0, "");
    return out.str();
}

inline std::string render(const Json& j, bool json) { return json ? j.dump(2) + "\n" : to_text(j); }

}  // namespace wha
