#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatbound/bounds.hpp"
#include "quatbound/polynomial.hpp"
#include "quatbound/qmatrix.hpp"
#include "quatbound/zeros.hpp"

namespace quatbound {

/// Insertion-ordered JSON keeps output key order canonical, which the
/// determinism guarantees rely on.
using Json = nlohmann::ordered_json;

inline Json to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

/// Parses a quaternion from a 4-element numeric array. `field` names the
/// location for error messages.
inline Quaternion quaternion_from_json(const Json& node, const std::string& field) {
    if (!node.is_array() || node.size() != 4)
        throw SchemaError(field + ": expected an array of 4 numbers [w, x, y, z]");
    for (const auto& component : node)
        if (!component.is_number()) throw SchemaError(field + ": expected an array of 4 numbers [w, x, y, z]");
    const Quaternion q{node[0].get<double>(), node[1].get<double>(), node[2].get<double>(),
                       node[3].get<double>()};
    if (!q_is_finite(q)) throw SchemaError(field + ": components must be finite");
    return q;
}

inline Json to_json(const QMatrix& m) {
    Json entries = Json::array();
    for (const Quaternion& q : m.entries()) entries.push_back(to_json(q));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline QMatrix qmatrix_from_json(const Json& node) {
    if (!node.is_object()) throw SchemaError("matrix: expected an object");
    for (const char* key : {"rows", "cols", "entries"})
        if (!node.contains(key)) throw SchemaError(std::string(key) + ": missing");
    if (!node["rows"].is_number_unsigned() || !node["cols"].is_number_unsigned())
        throw SchemaError("rows/cols: expected positive integers");
    const auto rows = node["rows"].get<std::size_t>();
    const auto cols = node["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0) throw SchemaError("rows/cols: expected positive integers");
    if (!node["entries"].is_array() || node["entries"].size() != rows * cols)
        throw SchemaError("entries: expected rows*cols quaternions");
    std::vector<Quaternion> entries;
    entries.reserve(rows * cols);
    for (std::size_t idx = 0; idx < node["entries"].size(); ++idx)
        entries.push_back(quaternion_from_json(node["entries"][idx], "entries[" + std::to_string(idx) + "]"));
    return QMatrix(rows, cols, std::move(entries));
}

inline Json to_json(const RightPolynomial& f) {
    Json coeffs = Json::array();
    for (const Quaternion& c : f.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"coefficients", std::move(coeffs)}};
}

/// Parses {"coefficients": [[w,x,y,z], ...]} ascending, constant term
/// first. Rejects the zero polynomial.
inline RightPolynomial polynomial_from_json(const Json& node) {
    if (!node.is_object() || !node.contains("coefficients")) throw SchemaError("coefficients: missing");
    const Json& coeffs = node["coefficients"];
    if (!coeffs.is_array() || coeffs.empty()) throw SchemaError("coefficients: expected a non-empty array");
    std::vector<Quaternion> out;
    out.reserve(coeffs.size());
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx)
        out.push_back(quaternion_from_json(coeffs[idx], "coefficients[" + std::to_string(idx) + "]"));
    return RightPolynomial(std::move(out));
}

inline RightPolynomial parse_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Json node;
    try {
        node = Json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw SchemaError(path + ": not valid JSON: " + err.what());
    }
    return polynomial_from_json(node);
}

inline Json to_json(const BoundValue& v) {
    if (!v.applicable) return Json{{"inapplicable", v.reason}};
    if (!v.note.empty()) return Json{{"value", v.value}, {"note", v.note}};
    return Json(v.value);
}

inline Json to_json(const BoundReport& report) {
    Json entries = Json::object();
    for (const auto& [name, value] : report.entries) entries[name] = to_json(value);
    Json intermediates = Json::object();
    auto put_finite = [&intermediates](const char* key, double value) {
        if (!std::isnan(value)) intermediates[key] = value;
    };
    put_finite("alpha_t1", report.alpha_t1);
    put_finite("alpha_t2", report.alpha_t2);
    put_finite("beta", report.beta);
    put_finite("gamma_theorem", report.gamma_theorem);
    put_finite("gamma_matrix", report.gamma_matrix);
    Json out{{"degree", report.degree},
             {"origin_zeros", report.origin_zeros},
             {"t4_variant", to_string(report.t4_selected)},
             {"entries", std::move(entries)},
             {"intermediates", std::move(intermediates)}};
    if (!std::isnan(report.best))
        out["best"] = Json{{"value", report.best}, {"source", report.best_source}};
    else
        out["best"] = nullptr;
    return out;
}

inline Json to_json(const ZeroClass& zc) {
    return Json{{"s", zc.s},
                {"t", zc.t},
                {"kind", to_string(zc.kind)},
                {"witness", to_json(zc.witness)},
                {"residual", zc.residual}};
}

inline Json to_json(const ZeroSet& zs) {
    Json classes = Json::array();
    for (const ZeroClass& zc : zs.classes) classes.push_back(to_json(zc));
    return Json{{"classes", std::move(classes)},
                {"max_modulus", zs.max_modulus},
                {"any_found", zs.any_found}};
}

}  // namespace quatbound
