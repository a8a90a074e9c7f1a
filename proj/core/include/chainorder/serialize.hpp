#pragma once

#include <json.hpp>

#include "chainorder/marked_poset.hpp"
#include "chainorder/no_body.hpp"
#include "chainorder/poly.hpp"
#include "chainorder/polytope.hpp"

namespace chainorder {

using Json = nlohmann::ordered_json;

inline Json to_json(const MarkedPoset& p) {
  Json j;
  j["elements"] = p.names;
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers) covers.push_back({p.names[a], p.names[b]});
  j["covers"] = covers;
  Json marked = Json::object();
  for (const auto& [e, v] : p.marking) marked[p.names[e]] = v;
  j["marked"] = marked;
  Json order = Json::array();
  for (int e : p.coordinate_order) order.push_back(p.names[e]);
  j["order"] = order;
  return j;
}

inline Json to_json(const LatticePointSet& s) {
  Json j;
  j["dim"] = s.dim;
  Json pts = Json::array();
  for (const ValVec& p : s.points) pts.push_back(p);
  j["points"] = pts;
  return j;
}

inline Json to_json(const HPolytope& h) {
  Json j;
  j["dim"] = h.dim;
  Json rows = Json::array();
  for (const auto& [coeffs, rhs] : h.rows) {
    Json row;
    Json a = Json::array();
    for (const Rat& c : coeffs) a.push_back(rat_to_string(c));
    row["a"] = a;
    row["b"] = rat_to_string(rhs);
    rows.push_back(row);
  }
  j["ineqs"] = rows;
  return j;
}

inline Json to_json(const VPolytope& v) {
  Json j;
  j["dim"] = v.dim;
  Json verts = Json::array();
  for (const auto& vert : v.vertices) {
    Json w = Json::array();
    for (const Rat& c : vert) w.push_back(rat_to_string(c));
    verts.push_back(w);
  }
  j["vertices"] = verts;
  return j;
}

inline Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["coeff"] = c.str();
    t["exps"] = m;
    terms.push_back(t);
  }
  Json j;
  j["nvars"] = p.nvars();
  j["terms"] = terms;
  return j;
}

inline Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size; ++j) row.push_back(to_json(m.entries[i][j]));
    rows.push_back(row);
  }
  Json j;
  j["size"] = m.size;
  j["entries"] = rows;
  return j;
}

}  // namespace chainorder
