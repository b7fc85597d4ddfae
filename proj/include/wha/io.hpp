#pragma once

// Canonical structure file (JSON) and matrix literals.
// Basis indices are 1-based on disk.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wha/structure.hpp"

namespace wha {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string where(const std::string& path, const std::string& msg) {
    return path.empty() ? msg : path + ": " + msg;
}

inline Scalar scalar_from_json(const Json& j, const std::string& path) {
    try {
        if (j.is_string()) return Scalar::parse(j.get<std::string>());
        if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
    } catch (const ParseError& e) {
        throw ParseError(where(path, e.what()));
    }
    throw ParseError(where(path, "expected a scalar string"));
}

inline const Json& field(const Json& obj, const char* name, const std::string& path = "") {
    auto it = obj.find(name);
    if (it == obj.end()) throw ParseError(where(path, std::string("missing field '") + name + "'"));
    return *it;
}

inline std::size_t index_from_json(const Json& j, std::size_t n, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(where(path, "index must be an integer"));
    long v = j.get<long>();
    if (v < 1 || static_cast<std::size_t>(v) > n)
        throw ParseError(where(path, "index " + std::to_string(v) + " outside 1.." + std::to_string(n)));
    return static_cast<std::size_t>(v - 1);
}

inline Vec vec_from_json(const Json& j, std::size_t n, const std::string& path) {
    if (!j.is_array()) throw ParseError(where(path, "expected an array"));
    if (j.size() != n) throw ParseError(where(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size())));
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from_json(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

inline Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

// Sparse triples; `names` gives the JSON key for each of the 3 tensor slots plus "c".
inline void triples_from_json(const Json& j, Tensor3& t, const char* const names[3], const std::string& path) {
    if (!j.is_array()) throw ParseError(where(path, "expected an array of entries"));
    const std::size_t n = t.dim();
    std::vector<char> seen(n * n * n, 0);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string p = path + "[" + std::to_string(e) + "]";
        const Json& ent = j[e];
        if (!ent.is_object()) throw ParseError(where(p, "expected an object"));
        std::size_t a = index_from_json(field(ent, names[0], p), n, p + "." + names[0]);
        std::size_t b = index_from_json(field(ent, names[1], p), n, p + "." + names[1]);
        std::size_t c = index_from_json(field(ent, names[2], p), n, p + "." + names[2]);
        char& s = seen[(a * n + b) * n + c];
        if (s) throw ParseError(where(p, "duplicate entry"));
        s = 1;
        t(a, b, c) = scalar_from_json(field(ent, "c", p), p + ".c");
    }
}

inline std::string json_error_location(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line, col = 1;
        else ++col;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON at " + detail::json_error_location(text, e.byte) + ": " + e.what());
    }
}

inline std::string read_file(const std::string& filename) {
    std::ifstream in(filename, std::ios::binary);
    if (!in) throw InputError("cannot open '" + filename + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& filename, const std::string& text) {
    std::ofstream out(filename, std::ios::binary);
    if (!out) throw InputError("cannot write '" + filename + "'");
    out << text;
}

inline Json structure_to_json(const WeakStructure& H) {
    const std::size_t n = H.dim();
    Json j;
    j["dim"] = n;
    j["conductor"] = H.conductor;
    j["unit"] = H.alg.unital ? detail::vec_to_json(H.alg.unit) : Json(nullptr);
    Json mult = Json::array(), comult = Json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (!H.alg.mult(a, b, c).is_zero())
                    mult.push_back({{"i", a + 1}, {"j", b + 1}, {"k", c + 1}, {"c", H.alg.mult(a, b, c).to_string()}});
                if (!H.coalg.comult(a, b, c).is_zero())
                    comult.push_back({{"k", a + 1}, {"i", b + 1}, {"j", c + 1}, {"c", H.coalg.comult(a, b, c).to_string()}});
            }
    j["mult"] = mult;
    j["comult"] = comult;
    j["counit"] = detail::vec_to_json(H.coalg.counit);
    if (H.antipode) {
        Json s = Json::array();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) s.push_back((*H.antipode)(a, b).to_string());
        j["antipode"] = s;
    } else {
        j["antipode"] = nullptr;
    }
    j["label"] = H.label;
    return j;
}

inline std::string structure_to_string(const WeakStructure& H) { return structure_to_json(H).dump(2) + "\n"; }

/// Parse a structure file. `require_unit` false accepts "unit": null (non-unital raw algebra);
/// comult/counit may then also be omitted.
inline WeakStructure structure_from_json(const Json& j, bool require_unit = true) {
    if (!j.is_object()) throw ParseError("top level must be an object");
    const Json& jd = detail::field(j, "dim");
    if (!jd.is_number_integer()) throw ParseError("dim: must be an integer");
    long dim = jd.get<long>();
    if (dim < 1) throw ParseError("dim: must be at least 1");
    const std::size_t n = static_cast<std::size_t>(dim);
    WeakStructure H(n);
    if (auto it = j.find("conductor"); it != j.end()) {
        if (!it->is_number_integer() || it->get<long>() < 1) throw ParseError("conductor: must be a positive integer");
        H.conductor = static_cast<int>(it->get<long>());
    }
    static const char* const mnames[3] = {"i", "j", "k"};
    static const char* const dnames[3] = {"k", "i", "j"};
    detail::triples_from_json(detail::field(j, "mult"), H.alg.mult, mnames, "mult");
    auto unit = j.find("unit");
    if (unit == j.end() || unit->is_null()) {
        if (require_unit) throw ParseError("missing field 'unit'");
        H.alg.unital = false;
    } else {
        H.alg.unit = detail::vec_from_json(*unit, n, "unit");
    }
    if (require_unit || j.contains("comult")) detail::triples_from_json(detail::field(j, "comult"), H.coalg.comult, dnames, "comult");
    if (require_unit || j.contains("counit")) H.coalg.counit = detail::vec_from_json(detail::field(j, "counit"), n, "counit");
    if (auto it = j.find("antipode"); it != j.end() && !it->is_null()) {
        if (!it->is_array() || it->size() != n * n) throw ParseError("antipode: expected null or " + std::to_string(n * n) + " scalars");
        Mat s(n, n);
        for (std::size_t a = 0; a < n * n; ++a) s(a / n, a % n) = detail::scalar_from_json((*it)[a], "antipode[" + std::to_string(a) + "]");
        H.antipode = s;
    }
    if (auto it = j.find("label"); it != j.end()) {
        if (!it->is_string()) throw ParseError("label: must be a string");
        H.label = it->get<std::string>();
    }
    try {
        H.validate();
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
    return H;
}

inline WeakStructure structure_from_string(const std::string& text, bool require_unit = true) {
    return structure_from_json(parse_json_text(text), require_unit);
}

inline WeakStructure load_structure(const std::string& filename, bool require_unit = true) {
    try {
        return structure_from_string(read_file(filename), require_unit);
    } catch (const ParseError& e) {
        throw ParseError(filename + ": " + e.what());
    }
}

inline Mat matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a non-empty array of rows");
    const std::size_t r = j.size();
    if (!j[0].is_array()) throw ParseError("matrix: rows must be arrays");
    const std::size_t c = j[0].size();
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!j[i].is_array() || j[i].size() != c) throw ParseError("matrix: row " + std::to_string(i + 1) + " has the wrong length");
        for (std::size_t k = 0; k < c; ++k)
            m(i, k) = detail::scalar_from_json(j[i][k], "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return m;
}

inline Json matrix_to_json(const Mat& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        a.push_back(row);
    }
    return a;
}

}  // namespace wha
