#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "psicalc/delta_series.hpp"
#include "psicalc/expansion.hpp"
#include "psicalc/op_matrix.hpp"
#include "psicalc/operators.hpp"
#include "psicalc/poly.hpp"
#include "psicalc/psi_sequence.hpp"
#include "psicalc/special_functions.hpp"
#include "psicalc/star_product.hpp"
#include "psicalc/umbral.hpp"

namespace psicalc {

using Json = nlohmann::json;

// Rationals travel as "num/den" strings; polynomials as arrays of them,
// ascending by degree; operator matrices as arrays of columns.

inline Json to_json(const Scalar& s) { return to_fraction_string(s); }

inline Scalar scalar_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a \"num/den\" string");
    return parse_scalar(j.get<std::string>());
}

inline Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (int i = 0; i <= std::max(0, p.degree()); ++i) arr.push_back(to_json(p.coeff(i)));
    return arr;
}

inline Poly poly_from_json(const Json& j, int cap) {
    if (!j.is_array()) throw ParseError("expected an array of coefficients");
    Poly p(cap);
    int i = 0;
    for (const auto& c : j) p.set_coeff(i++, scalar_from_json(c));
    return p;
}

inline Json to_json(const OpMatrix& m) {
    Json arr = Json::array();
    for (const Poly& col : m.columns()) arr.push_back(to_json(col));
    return arr;
}

/// Parses a matrix given as an array of columns. User-supplied matrices
/// are declared exact, so the validity covers the whole cap.
inline OpMatrix op_from_json(const Json& j, int cap) {
    if (!j.is_array() || static_cast<int>(j.size()) != cap + 1)
        throw ParseError("expected cap+1 columns");
    OpMatrix m(cap);
    for (int col = 0; col <= cap; ++col) m.set_column(col, poly_from_json(j.at(static_cast<std::size_t>(col)), cap));
    return m;
}

inline Json to_json(const PsiSequence& psi) {
    Json j;
    j["label"] = psi.label();
    j["q"] = psi.q() ? Json(to_fraction_string(*psi.q())) : Json(nullptr);
    Json arr = Json::array();
    for (const auto& v : psi.n_psi_table()) arr.push_back(to_fraction_string(v));
    j["n_psi"] = arr;
    j["cap"] = psi.cap();
    return j;
}

inline PsiSequence psi_from_json(const Json& j) {
    const int cap = j.at("cap").get<int>();
    std::vector<Scalar> n_psi;
    for (const auto& v : j.at("n_psi")) n_psi.push_back(scalar_from_json(v));
    return PsiSequence::custom(std::move(n_psi), cap, j.value("label", std::string("custom")));
}

inline Json to_json(const NamedOp& op) {
    Json j;
    j["kind"] = op_kind_name(op.kind);
    j["psi"] = op.psi ? to_json(*op.psi) : Json(nullptr);
    j["matrix"] = to_json(op.matrix);
    return j;
}

inline Json to_json(const DeltaSeries& s) {
    Json j;
    j["psi"] = to_json(s.psi());
    Json arr = Json::array();
    for (const auto& c : s.raw_coeffs()) arr.push_back(to_fraction_string(c));
    j["coeffs"] = arr;
    return j;
}

inline Json to_json(const BasicSequence& b) {
    Json j;
    j["psi"] = to_json(b.psi);
    Json polys = Json::array();
    for (const Poly& p : b.polys) polys.push_back(to_json(p));
    j["polys"] = polys;
    j["source"] = basic_source_name(b.source);
    return j;
}

inline Json to_json(const RecognitionResult& r) {
    Json j;
    j["is_series"] = r.is_series;
    j["psi"] = r.psi ? to_json(*r.psi) : Json(nullptr);
    Json q = Json::array();
    for (const auto& c : r.q_coeffs) q.push_back(to_fraction_string(c));
    j["q_coeffs"] = q;
    Json table = Json::array();
    for (const auto& row : r.b_table) {
        Json jrow = Json::array();
        for (const auto& v : row) jrow.push_back(to_fraction_string(v));
        table.push_back(jrow);
    }
    j["b_table"] = table;
    if (r.failure_witness) {
        j["witness"] = Json::array({r.failure_witness->first, r.failure_witness->second});
        j["predicted"] = to_fraction_string(r.predicted);
        j["actual"] = to_fraction_string(r.actual);
    } else {
        j["witness"] = nullptr;
    }
    j["scale"] = to_fraction_string(r.scale);
    return j;
}

inline Json to_json(const OpExpansion& e) {
    Json j;
    Json polys = Json::array();
    for (const Poly& p : e.q_polys) polys.push_back(to_json(p));
    j["q_polys"] = polys;
    j["order"] = e.order;
    j["basis_mode"] = basis_mode_name(e.mode);
    return j;
}

inline Json to_json(const PoissonModel& m) {
    Json j;
    j["lambda"] = to_fraction_string(m.lam);
    Json comps = Json::array();
    for (const Poly& p : m.components) comps.push_back(to_json(p));
    j["components"] = comps;
    j["normalizer"] = to_json(m.normalizer);
    j["guard_degree"] = m.guard_degree;
    return j;
}

inline Json to_json(const PsiSeries& s) {
    Json j;
    j["kind"] = series_kind_name(s.kind);
    Json arr = Json::array();
    for (const auto& c : s.coeffs) arr.push_back(to_fraction_string(c));
    j["coeffs"] = arr;
    j["psi"] = to_json(s.psi);
    return j;
}

} // namespace psicalc
