#ifndef E8JAC_SERIALIZE_HPP
#define E8JAC_SERIALIZE_HPP

// JSON forms of the library types. Objects use sorted keys and rationals are
// canonical "p/q" strings, so dump() output is byte-stable.

#include <string>
#include <vector>

#include "json.hpp"

#include "e8jac/catalog.hpp"

namespace e8jac {

using Json = nlohmann::json;

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

inline Json fw_json(const Fw& x) { return Json(std::vector<int>(x.begin(), x.end())); }

/// [{"fw": [...], "label": "8''", "coeff": "p/q", "display": "p/q"}, ...] by orbit order.
/// "coeff" multiplies the plain orbit sum; "display" the Sigma-normalized one.
inline Json to_json(const InvariantElement& x) {
  Json a = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json t;
    t["fw"] = fw_json(m.fw);
    t["label"] = m.is_zero() ? std::string("1") : sigma_label(m);
    t["coeff"] = rational_json(c);
    t["display"] = rational_json(m.is_zero() ? c : Rational(c * ratio(Integer(static_cast<unsigned long>(orbit_size(m))), Integer(240))));
    a.push_back(std::move(t));
  }
  return a;
}

inline InvariantElement invariant_from_json(const Json& a) {
  InvariantElement x;
  for (const auto& t : a) {
    Fw fw{};
    const auto v = t.at("fw").get<std::vector<int>>();
    if (v.size() != 8) throw std::invalid_argument("orbit needs 8 fundamental-weight coordinates");
    std::copy(v.begin(), v.end(), fw.begin());
    x.add_term(DominantWeight::from_fw(fw), rational_from_json(t.at("coeff")));
  }
  return x;
}

inline Json to_json(const ModularQSeries& f) {
  Json j;
  j["weight"] = f.weight();
  j["order"] = f.order();
  Json c = Json::array();
  for (const auto& x : f.coeffs()) c.push_back(rational_json(x));
  j["coeffs"] = std::move(c);
  return j;
}

inline ModularQSeries modular_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return ModularQSeries(j.at("weight").get<int>(), std::move(c));
}

inline Json to_json(const JacobiQExpansion& f) {
  Json j;
  j["weight"] = f.weight();
  j["index"] = f.index();
  j["order"] = f.order();
  Json terms = Json::array();
  for (int n = 0; n <= f.order(); ++n) {
    Json t;
    t["n"] = n;
    t["orbits"] = to_json(f[n]);
    t["text"] = display_text(f[n]);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline JacobiQExpansion jacobi_from_json(const Json& j) {
  const int order = j.at("order").get<int>();
  std::vector<InvariantElement> terms(static_cast<std::size_t>(order) + 1);
  for (const auto& t : j.at("terms")) {
    const int n = t.at("n").get<int>();
    if (n < 0 || n > order) throw std::invalid_argument("q-power outside the declared order");
    terms[static_cast<std::size_t>(n)] = invariant_from_json(t.at("orbits"));
  }
  return JacobiQExpansion(j.at("weight").get<int>(), j.at("index").get<int>(), std::move(terms));
}

inline Json to_json(const FormInfo& i) {
  Json j;
  j["name"] = i.name;
  j["weight"] = i.weight;
  j["index"] = i.index;
  j["kind"] = to_string(i.kind);
  j["recipe"] = i.recipe;
  j["normalization"] = to_string(i.normalization);
  j["reference"] = i.reference;
  j["constructible"] = i.constructible;
  if (!i.note.empty()) j["note"] = i.note;
  return j;
}

/// A built catalog form together with its registry metadata.
inline Json form_json(std::string_view name, const JacobiQExpansion& f) {
  Json j = to_json(f);
  j["name"] = canonical_name(name);
  Json meta = to_json(form_info(name));
  if (auto c = resolved_constant(name)) meta["resolved_constant"] = rational_json(*c);
  j["metadata"] = std::move(meta);
  return j;
}

inline Json to_json(const Classification& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["order"] = c.order;
  j["singular"] = c.singular;
  if (c.witness) j["witness"] = Json{{"n", c.witness->n}, {"fw", fw_json(c.witness->m.fw)}, {"label", sigma_label(c.witness->m)}};
  return j;
}

inline Json to_json(const CascadeSystem& s) {
  Json j;
  j["t"] = s.t;
  j["w0"] = s.w0;
  j["norms"] = s.norms;
  Json m = Json::array();
  for (const auto& row : s.matrix) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_json(x));
    m.push_back(std::move(r));
  }
  j["matrix"] = std::move(m);
  Json ns = Json::array();
  for (const auto& v : s.nullspace) {
    Json r = Json::array();
    for (const auto& x : v) r.push_back(rational_json(x));
    ns.push_back(std::move(r));
  }
  j["nullspace"] = std::move(ns);
  return j;
}

inline Json to_json(const FreeModuleReport& r) {
  Json j;
  j["index"] = r.index;
  j["order"] = r.order;
  j["generators"] = r.generators;
  j["ok"] = r.ok();
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["weight"] = row.weight;
    x["predicted"] = row.predicted;
    x["rank"] = row.rank;
    x["ok"] = row.ok();
    if (row.relation) {
      Json rel = Json::object();
      for (std::size_t i = 0; i < row.relation->size(); ++i)
        if (sgn((*row.relation)[i]) != 0) rel[row.labels[i]] = rational_json((*row.relation)[i]);
      x["relation"] = std::move(rel);
    }
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline Json to_json(const BoundRow& b) {
  Json j{{"weight", b.weight}, {"upper_bound", b.upper}};
  if (!b.notes.empty()) j["notes"] = b.notes;
  return j;
}

}  // namespace e8jac

#endif  // E8JAC_SERIALIZE_HPP
