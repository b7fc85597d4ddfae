#pragma once

// The `wha` command line. run() parses argv, dispatches, writes reports to `out` and
// diagnostics to `err`, and returns the exit code:
//   0 ok, 1 verification failed / claim refuted, 2 input or usage error, 3 inconclusive.

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wha/wha.hpp"

namespace wha::cli {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kInconclusive = 3 };

namespace detail {

struct Globals {
    std::string report = "text";
    std::string out;
    int conductor = 0;
    std::string convention = "columns";

    bool json() const { return report == "json"; }
    Convention conv() const { return parse_convention(convention); }
};

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> v;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            v.push_back(wha::detail::trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!wha::detail::trim(cur).empty() || !v.empty()) v.push_back(wha::detail::trim(cur));
    return v;
}

inline bool is_catalog_id(const std::string& ref) {
    for (const auto& e : catalog())
        if (e.id() == ref) return true;
    return false;
}

// catalog:<id>, a bare catalog id, a built-in name or a file.
inline WeakStructure load(const std::string& ref, const Globals& g) {
    WeakStructure H;
    if (!std::filesystem::exists(ref) && is_catalog_id(ref)) H = catalog_get(ref).structure;
    else H = resolve_structure(ref);
    if (g.conductor > 0) {
        H.conductor = g.conductor;
        try {
            H.validate();
        } catch (const InputError& e) {
            throw InputError(ref + ": " + e.what() + " (--conductor " + std::to_string(g.conductor) + ")");
        }
    }
    return H;
}

inline Mat parse_matrix(const std::string& text, const Globals& g) {
    Mat m = matrix_from_json(parse_json_text(text));
    if (g.conductor > 0)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j).conductor() != 1 && g.conductor % m(i, j).conductor() != 0)
                    throw InputError("matrix entry " + m(i, j).to_string() + " is outside Q(zeta_" + std::to_string(g.conductor) + ")");
    return m;
}

// Parametric matrix rows as strings; numbers are accepted and stringified.
inline std::vector<std::vector<std::string>> parse_string_matrix(const std::string& text) {
    const Json j = parse_json_text(text);
    if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a non-empty array of rows");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array()) throw ParseError("matrix: row " + std::to_string(i + 1) + " is not an array");
        std::vector<std::string> r;
        for (const auto& x : j[i]) {
            if (x.is_string()) r.push_back(x.get<std::string>());
            else if (x.is_number_integer()) r.push_back(std::to_string(x.get<long>()));
            else throw ParseError("matrix: entries must be strings or integers");
        }
        rows.push_back(r);
    }
    return rows;
}

// "alpha=2, beta=1/3; alpha=3, beta=1"
inline std::vector<std::vector<Rational>> parse_points(const std::string& text, const std::vector<std::string>& names) {
    std::vector<std::vector<Rational>> pts;
    for (const auto& item : split(text, ';')) {
        if (item.empty()) continue;
        std::vector<std::optional<Rational>> v(names.size());
        for (const auto& kv : split(item, ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw ParseError("point '" + item + "': expected name=value");
            const std::string name = wha::detail::trim(kv.substr(0, eq));
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw ParseError("point '" + item + "': unknown parameter '" + name + "'");
            const Scalar s = Scalar::parse(wha::detail::trim(kv.substr(eq + 1)));
            if (!s.is_rational()) throw ParseError("point '" + item + "': parameter values must be rational");
            v[static_cast<std::size_t>(it - names.begin())] = s.to_rational();
        }
        std::vector<Rational> p;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i]) throw ParseError("point '" + item + "': missing " + names[i]);
            p.push_back(*v[i]);
        }
        pts.push_back(p);
    }
    if (pts.empty()) throw ParseError("no points given");
    return pts;
}

inline std::optional<Kind> kind_opt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_kind(s);
}

inline std::optional<std::size_t> dim_opt(std::size_t d) {
    if (d == 0) return std::nullopt;
    return d;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    using namespace detail;
    Globals g;
    CLI::App app{"Exact verification, construction and classification tools for weak bialgebras and weak Hopf algebras", "wha"};
    app.set_version_flag("--version", std::string(kToolkitVersion) + " (" + kCatalogRevision + ")");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--report", g.report, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", g.out, "output file (structures, reports) or directory (search, docs)");
    app.add_option("--conductor", g.conductor, "declare the field Q(zeta_N) for inputs")->check(CLI::PositiveNumber);
    app.add_option("--convention", g.convention, "matrix convention for basis changes")->check(CLI::IsMember({"columns", "rows"}));

    std::function<int()> action;

    auto emit = [&](const Json& j) {
        const std::string text = render(j, g.json());
        if (g.out.empty()) out << text;
        else write_file(g.out, text);
    };
    auto emit_structure = [&](const WeakStructure& H) {
        if (g.out.empty()) out << structure_to_string(H);
        else write_file(g.out, structure_to_string(H));
    };

    // verify
    std::string v_ref, v_level;
    bool v_cross = false;
    auto* verify_cmd = app.add_subcommand("verify", "check the axioms of a structure file or reference");
    verify_cmd->fallthrough();
    verify_cmd->add_option("structure", v_ref, "file, catalog id, catalog:<id> or built-in name")->required();
    verify_cmd->add_option("--level", v_level, "algebra | coalgebra | weak-bialgebra | weak-hopf | strict-bialgebra | strict-hopf");
    verify_cmd->add_flag("--cross-check", v_cross, "also compare against the index-sum equations");
    verify_cmd->callback([&] {
        action = [&] {
            const WeakStructure H = load(v_ref, g);
            const Level lv = v_level.empty() ? (H.antipode ? Level::WeakHopf : Level::WeakBialgebra) : parse_level(v_level);
            const VerificationReport r = verify(H, lv);
            Json j = to_json(r);
            bool ok = r.pass();
            if (v_cross) {
                const CrossCheckReport c = cross_check(H);
                j["cross_check"] = to_json(c);
                ok = ok && c.consistent();
            }
            emit(j);
            return ok ? kOk : kFail;
        };
    });

    // construct
    ConstructRequest cr;
    std::string c_verify;
    bool c_list = false;
    auto* construct_cmd = app.add_subcommand("construct", "build a structure by name");
    construct_cmd->fallthrough();
    construct_cmd->add_option("name", cr.name, "construction name (see --list)");
    construct_cmd->add_option("n", cr.n, "size argument");
    construct_cmd->add_option("--base", cr.base, "base algebra: null:N, zmod:K, catalog:<id>, built-in name or file");
    construct_cmd->add_option("--split", cr.split, "orthogonal-idempotents: idempotent used in Delta(1)");
    construct_cmd->add_option("--idempotent", cr.idempotent, "weak-from-idempotent: basis index of e");
    construct_cmd->add_flag("--antipode", cr.antipode, "two-unit variants: attach S(1) = 1, S(e) = e");
    construct_cmd->add_flag("--skip-semigroup-check", cr.skip_semigroup_check, "allow a base without a semigroup basis");
    construct_cmd->add_option("--verify", c_verify, "verify at this level (or 'promised') and report instead of printing the structure");
    construct_cmd->add_flag("--list", c_list, "list constructions");
    construct_cmd->callback([&] {
        action = [&] {
            if (c_list || cr.name.empty()) {
                Json a = Json::array();
                for (const auto& c : construction_names()) a.push_back({{"name", c.name}, {"usage", c.usage}, {"summary", c.summary}});
                emit(Json{{"report", "constructions"}, {"constructions", a}});
                return cr.name.empty() && !c_list ? kInput : kOk;
            }
            const Built b = construct(cr);
            if (c_verify.empty()) {
                emit_structure(b.structure);
                return kOk;
            }
            const Level lv = c_verify == "promised" ? b.promised : parse_level(c_verify);
            const VerificationReport r = verify(b.structure, lv);
            Json j = to_json(r);
            j["promised_level"] = level_name(b.promised);
            emit(j);
            return r.pass() ? kOk : kFail;
        };
    });

    // transport
    std::string t_ref, t_matrix;
    auto* transport_cmd = app.add_subcommand("transport", "apply a basis change g . H");
    transport_cmd->fallthrough();
    transport_cmd->add_option("structure", t_ref)->required();
    transport_cmd->add_option("--matrix", t_matrix, "JSON array of rows of scalar strings")->required();
    transport_cmd->callback([&] {
        action = [&] {
            const WeakStructure H = load(t_ref, g);
            WeakStructure T = transport(H, BasisChange::from(parse_matrix(t_matrix, g), g.conv()));
            T.label = H.label + " transported";
            emit_structure(T);
            return kOk;
        };
    });

    // aut
    auto* aut = app.add_subcommand("aut", "automorphism checks");
    aut->fallthrough();
    aut->require_subcommand(1);
    std::string a_ref, a_matrix, a_params, a_nonzero, a_at;
    std::size_t a_min = 1;
    auto* aut_check = aut->add_subcommand("check", "is a (parametric) matrix an automorphism");
    aut_check->fallthrough();
    aut_check->add_option("structure", a_ref)->required();
    aut_check->add_option("--matrix", a_matrix, "JSON rows; polynomial strings when --params is given")->required();
    aut_check->add_option("--params", a_params, "comma-separated parameter names");
    aut_check->add_option("--nonzero", a_nonzero, "comma-separated polynomials assumed nonzero");
    aut_check->add_option("--at", a_at, "check only these points: 'a=1,b=2; a=3,b=1/2'");
    aut_check->add_option("--min-samples", a_min, "minimum grid size per parameter");
    aut_check->callback([&] {
        action = [&]() -> int {
            const WeakStructure H = load(a_ref, g);
            if (a_params.empty()) {
                const WitnessResult w = is_automorphism(H, BasisChange::from(parse_matrix(a_matrix, g), g.conv()));
                Json j{{"report", "aut-check"}, {"structure", H.label}, {"convention", convention_name(g.conv())}};
                j["result"] = to_json(w);
                emit(j);
                return w.pass ? kOk : kFail;
            }
            const auto names = split(a_params, ',');
            std::vector<std::string> nz;
            if (!a_nonzero.empty()) nz = split(a_nonzero, ',');
            const ParamMatrix P = ParamMatrix::parse(names, parse_string_matrix(a_matrix), nz, g.conv());
            const ParamResult r = a_at.empty() ? check_parametric_automorphism(H, P, a_min) : check_parametric_at(H, P, parse_points(a_at, names));
            Json j{{"report", "aut-check-parametric"}, {"structure", H.label}, {"convention", convention_name(g.conv())}};
            j["obstruction"] = P.obstruction().to_string(names);
            j["result"] = to_json(r, names);
            emit(j);
            return r.verdict == Verdict::Pass ? kOk : r.verdict == Verdict::Fail ? kFail : kInconclusive;
        };
    });

    std::vector<std::string> gr_matrices;
    std::string gr_ref;
    std::size_t gr_bound = 10000;
    auto* aut_group = aut->add_subcommand("group", "order of the group generated by matrices");
    aut_group->fallthrough();
    aut_group->add_option("--matrix", gr_matrices, "generator (repeatable)")->required()->allow_extra_args(false)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    aut_group->add_option("--structure", gr_ref, "also check each generator is an automorphism of this structure");
    aut_group->add_option("--bound", gr_bound, "give up beyond this many elements");
    aut_group->callback([&] {
        action = [&] {
            std::vector<Mat> gens;
            for (const auto& m : gr_matrices) gens.push_back(parse_matrix(m, g));
            const GroupClosure c = group_closure(gens, gr_bound);
            Json j{{"report", "aut-group"}};
            j["closure"] = to_json(c);
            bool ok = true;
            if (!gr_ref.empty()) {
                const WeakStructure H = load(gr_ref, g);
                Json gs = Json::array();
                for (const auto& m : gens) {
                    const WitnessResult w = is_automorphism(H, BasisChange::from(m, g.conv()));
                    ok = ok && w.pass;
                    gs.push_back({{"matrix", matrix_text(m)}, {"result", to_json(w)}});
                }
                j["generators"] = gs;
            }
            emit(j);
            return ok ? kOk : kFail;
        };
    });

    std::string tg_ref;
    auto* aut_tangent = aut->add_subcommand("tangent", "dimension of the stabilizer tangent space");
    aut_tangent->fallthrough();
    aut_tangent->add_option("structure", tg_ref)->required();
    aut_tangent->callback([&] {
        action = [&] {
            const WeakStructure H = load(tg_ref, g);
            Json j{{"report", "aut-tangent"}, {"structure", H.label}};
            j["tangent"] = to_json(stabilizer_tangent_dim(H));
            emit(j);
            return kOk;
        };
    });

    // catalog
    auto* cat = app.add_subcommand("catalog", "the classification tables");
    cat->fallthrough();
    cat->require_subcommand(1);
    std::size_t k_dim = 0;
    std::string k_kind, k_id;
    auto with_filter = [&](CLI::App* s) {
        s->fallthrough();
        s->add_option("--dim", k_dim, "dimension");
        s->add_option("--kind", k_kind, "algebra | weak-bialgebra | weak-hopf");
    };
    auto* cat_list = cat->add_subcommand("list", "list entries");
    with_filter(cat_list);
    cat_list->callback([&] {
        action = [&] {
            Json a = Json::array();
            for (const CatalogEntry* e : catalog_entries(dim_opt(k_dim), kind_opt(k_kind)))
                a.push_back({{"id", e->id()}, {"dim", e->dim}, {"kind", kind_name(e->kind)}, {"algebra", e->algebra}, {"notes", e->notes}});
            emit(Json{{"report", "catalog-list"}, {"revision", kCatalogRevision}, {"entries", a}});
            return kOk;
        };
    });
    auto* cat_show = cat->add_subcommand("show", "one entry; --out writes its structure file");
    cat_show->fallthrough();
    cat_show->add_option("id", k_id)->required();
    cat_show->callback([&] {
        action = [&] {
            const CatalogEntry& e = catalog_get(k_id);
            if (!g.out.empty()) {
                write_file(g.out, structure_to_string(e.structure));
                return kOk;
            }
            Json j{{"report", "catalog-show"}, {"id", e.id()}, {"kind", kind_name(e.kind)}, {"algebra", e.algebra}, {"notes", e.notes}};
            if (e.claim) j["claim"] = e.claim->statement;
            j["structure"] = structure_to_json(e.structure);
            emit(j);
            return kOk;
        };
    });
    auto* cat_verify = cat->add_subcommand("verify", "verify entries at their level");
    with_filter(cat_verify);
    cat_verify->callback([&] {
        action = [&] {
            auto entries = catalog_entries(dim_opt(k_dim), kind_opt(k_kind));
            Json a = Json::array();
            bool ok = true;
            for (const auto& l : verify_all(entries)) {
                ok = ok && l.pass;
                Json x{{"id", l.id}, {"level", level_name(l.level)}, {"pass", l.pass}};
                if (!l.witness.empty()) x["witness"] = l.witness;
                a.push_back(x);
            }
            emit(Json{{"report", "catalog-verify"}, {"revision", kCatalogRevision}, {"all_pass", ok}, {"entries", a}});
            return ok ? kOk : kFail;
        };
    });
    auto* cat_fp = cat->add_subcommand("fingerprint", "invariant fingerprint of an entry or structure");
    cat_fp->fallthrough();
    cat_fp->add_option("id", k_id)->required();
    cat_fp->callback([&] {
        action = [&] {
            const WeakStructure H = load(k_id, g);
            Json j{{"report", "fingerprint"}, {"structure", H.label}};
            j["fingerprint"] = to_json(fingerprint(H));
            emit(j);
            return kOk;
        };
    });
    auto* cat_sep = cat->add_subcommand("separation", "pairwise separation by fingerprints");
    with_filter(cat_sep);
    cat_sep->callback([&] {
        action = [&] {
            if (k_dim == 0) throw InputError("separation needs --dim");
            const Kind k = k_kind.empty() ? Kind::WeakBialgebra : parse_kind(k_kind);
            const SeparationReport r = pairwise_separation(k_dim, k);
            emit(to_json(r));
            return r.inconclusive().empty() ? kOk : kInconclusive;
        };
    });
    auto* cat_claims = cat->add_subcommand("claims", "check the stated automorphism groups");
    with_filter(cat_claims);
    cat_claims->callback([&] {
        action = [&] {
            if (k_dim == 0) throw InputError("claims needs --dim");
            const Kind k = k_kind.empty() ? Kind::WeakBialgebra : parse_kind(k_kind);
            const auto rs = verify_claims(k_dim, k, g.conv());
            emit(to_json(rs, k_dim, k));
            bool refuted = false, inconclusive = false;
            for (const auto& r : rs) {
                refuted = refuted || r.status == ClaimStatus::Refuted;
                inconclusive = inconclusive || r.status == ClaimStatus::Inconclusive;
            }
            return refuted ? kFail : inconclusive ? kInconclusive : kOk;
        };
    });
    auto* cat_read = cat->add_subcommand("readings", "alternative readings of three index-sum equations");
    cat_read->fallthrough();
    cat_read->callback([&] {
        action = [&] {
            emit(readings_report());
            return kOk;
        };
    });

    // search
    SearchSpec spec;
    std::size_t s_dim = 0;
    std::string s_coeffs = "-1,0,1,2", s_freeze;
    bool s_no_prune = false, s_estimate = false;
    auto* search_cmd = app.add_subcommand("search", "enumerate weak bialgebra structures over a catalog algebra");
    search_cmd->fallthrough();
    search_cmd->add_option("--algebra", spec.algebra, "catalog algebra id");
    search_cmd->add_option("--dim", s_dim, "expected dimension (checked against the algebra)");
    search_cmd->add_option("--coeffs", s_coeffs, "comma-separated coefficient set");
    search_cmd->add_option("--freeze", s_freeze, "assignments like 'f[1]=2; D[1,2,2]=0'");
    search_cmd->add_option("--budget", spec.budget, "maximum number of candidates");
    search_cmd->add_option("--threads", spec.threads, "worker threads");
    search_cmd->add_flag("--no-prune", s_no_prune, "brute force the full grid");
    search_cmd->add_flag("--estimate-only", s_estimate, "print the size estimate and stop");
    search_cmd->callback([&] {
        action = [&] {
            spec.coeffs.clear();
            for (const auto& c : split(s_coeffs, ',')) spec.coeffs.push_back(Scalar::parse(c));
            if (!s_freeze.empty()) spec.freeze = parse_freeze(s_freeze);
            spec.prune = !s_no_prune;
            if (s_dim != 0 && catalog_get(spec.algebra).dim != s_dim)
                throw InputError("--dim " + std::to_string(s_dim) + " does not match " + spec.algebra);
            if (s_estimate) {
                Json j{{"report", "search-estimate"}, {"algebra", spec.algebra}};
                j["estimate"] = to_json(estimate(spec));
                out << render(j, g.json());
                return kOk;
            }
            const SearchResult r = enumerate(spec);
            const Json j = to_json(r, spec);
            if (!g.out.empty()) {
                std::filesystem::create_directories(g.out);
                for (std::size_t i = 0; i < r.survivors.size(); ++i) {
                    char name[32];
                    std::snprintf(name, sizeof name, "survivor-%04zu.json", i + 1);
                    WeakStructure H = r.survivors[i].structure;
                    H.label = spec.algebra + " search survivor " + std::to_string(i + 1);
                    write_file((std::filesystem::path(g.out) / name).string(), structure_to_string(H));
                }
                write_file((std::filesystem::path(g.out) / "summary.json").string(), j.dump(2) + "\n");
            }
            out << render(j, g.json());
            return r.all_reverified ? kOk : kFail;
        };
    });

    // iso
    auto* iso = app.add_subcommand("iso", "isomorphism witnesses and invariants");
    iso->fallthrough();
    iso->require_subcommand(1);
    std::string i_a, i_b, i_matrix;
    auto* iso_w = iso->add_subcommand("witness", "check that g: B -> A is an isomorphism (transport(A, g) == B)");
    iso_w->fallthrough();
    iso_w->add_option("a", i_a)->required();
    iso_w->add_option("b", i_b)->required();
    iso_w->add_option("--matrix", i_matrix)->required();
    iso_w->callback([&] {
        action = [&] {
            const WeakStructure A = load(i_a, g), B = load(i_b, g);
            const WitnessResult w = is_morphism_witness(A, B, BasisChange::from(parse_matrix(i_matrix, g), g.conv()));
            Json j{{"report", "iso-witness"}, {"a", A.label}, {"b", B.label}, {"convention", convention_name(g.conv())}};
            j["result"] = to_json(w);
            emit(j);
            return w.pass ? kOk : kFail;
        };
    });
    auto* iso_f = iso->add_subcommand("fingerprint-compare", "separate two structures by invariants");
    iso_f->fallthrough();
    iso_f->add_option("a", i_a)->required();
    iso_f->add_option("b", i_b)->required();
    iso_f->callback([&] {
        action = [&] {
            const WeakStructure A = load(i_a, g), B = load(i_b, g);
            const Fingerprint fa = fingerprint(A), fb = fingerprint(B);
            Json j{{"report", "fingerprint-compare"}, {"a", A.label}, {"b", B.label}};
            j["fingerprint_a"] = to_json(fa);
            j["fingerprint_b"] = to_json(fb);
            std::optional<std::string> c = A.dim() == B.dim() ? separating_component(fa, fb) : std::optional<std::string>("dim");
            j["separated_by"] = c ? Json(*c) : Json(nullptr);
            j["status"] = c ? "not isomorphic" : "inconclusive: equal fingerprints";
            emit(j);
            return c ? kOk : kInconclusive;
        };
    });

    // docs
    auto* docs = app.add_subcommand("docs", "generated documentation");
    docs->fallthrough();
    docs->require_subcommand(1);
    auto* docs_gen = docs->add_subcommand("generate", "write SWEEDLER.md, CATALOG.md, ERRATA.md and evidence files");
    docs_gen->fallthrough();
    docs_gen->callback([&] {
        action = [&] {
            const std::filesystem::path dir = g.out.empty() ? "docs" : g.out;
            Json files = Json::array();
            for (const auto& d : generate_docs()) {
                const auto p = dir / d.path;
                std::filesystem::create_directories(p.parent_path());
                write_file(p.string(), d.text);
                files.push_back(p.string());
            }
            out << render(Json{{"report", "docs"}, {"files", files}}, g.json());
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    }
    if (!action) {
        err << "error: missing subcommand\n";
        return kInput;
    }
    try {
        return action();
    } catch (const Error& e) {  // InputError family and MathError preconditions alike
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    }
}

}  // namespace wha::cli
