#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cohomology.hpp"
#include "lsa.hpp"
#include "scalar.hpp"

namespace suplie {

using Json = nlohmann::json;  // std::map objects: keys come out sorted

inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_string(x));
  return a;
}

inline Json matrix_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

inline Json scalar_matrix_json(const ScalarMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    a.push_back(r);
  }
  return a;
}

// ---------------------------------------------------------------- readers with path-carrying errors

namespace json_detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("schema error at " + path + ": " + what);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "." + key, "missing");
  return *it;
}

inline Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) schema_error(path, "expected a scalar string");
  Scalar s;
  try {
    s = Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    schema_error(path, e.what());
  }
  if (!s.is_rational()) schema_error(path, "structure constants must be rational, got " + j.get<std::string>());
  return s.rational_value();
}

inline std::size_t index(const Json& j, const std::string& path, std::size_t n) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer index");
  long v = j.get<long>();
  if (v < 1 || static_cast<std::size_t>(v) > n) schema_error(path, "index " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

inline Vec vec(const Json& j, const std::string& path, std::size_t n) {
  if (!j.is_array()) schema_error(path, "expected an array");
  if (j.size() != n) schema_error(path, "expected length " + std::to_string(n) + ", got " + std::to_string(j.size()));
  Vec v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = rational(j[k], path + "[" + std::to_string(k) + "]");
  return v;
}

inline RatMatrix matrix(const Json& j, const std::string& path, std::size_t r, std::size_t c) {
  if (!j.is_array() || j.size() != r) schema_error(path, "expected " + std::to_string(r) + " rows");
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    Vec row = vec(j[i], path + "[" + std::to_string(i) + "]", c);
    for (std::size_t k = 0; k < c; ++k) m(i, k) = row[k];
  }
  return m;
}

}  // namespace json_detail

inline Json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(file + ": malformed JSON: " + e.what());
  }
}

inline Json parse_json_text(const std::string& text, const std::string& origin = "<input>") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": malformed JSON: " + e.what());
  }
}

// ---------------------------------------------------------------- algebra

// {"names": [...], "parities": [...], "brackets": [{"i": 1, "j": 2, "value": [...]}]}
// Indices are 1-based; every nonzero bracket of the table is listed, ordered by (i, j).
inline Json algebra_json(const LieSuperalgebra& l) {
  Json j;
  j["names"] = l.names();
  j["parities"] = l.parities();
  Json br = Json::array();
  const std::size_t n = l.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!l.bracket_basis(a, b).empty()) br.push_back({{"i", a + 1}, {"j", b + 1}, {"value", vec_json(to_dense(l.bracket_basis(a, b), n))}});
  j["brackets"] = br;
  return j;
}

inline LieSuperalgebra algebra_from_json(const Json& j, const std::string& path = "$") {
  using namespace json_detail;
  const Json& names = field(j, "names", path);
  const Json& pars = field(j, "parities", path);
  const Json& brs = field(j, "brackets", path);
  if (!names.is_array()) schema_error(path + ".names", "expected an array of strings");
  std::vector<std::string> ns;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (!names[k].is_string()) schema_error(path + ".names[" + std::to_string(k) + "]", "expected a string");
    ns.push_back(names[k].get<std::string>());
  }
  const std::size_t n = ns.size();
  if (!pars.is_array() || pars.size() != n) schema_error(path + ".parities", "expected " + std::to_string(n) + " entries");
  std::vector<int> ps;
  for (std::size_t k = 0; k < n; ++k) {
    if (!pars[k].is_number_integer() || (pars[k] != 0 && pars[k] != 1))
      schema_error(path + ".parities[" + std::to_string(k) + "]", "expected 0 or 1");
    ps.push_back(pars[k].get<int>());
  }
  if (!brs.is_array()) schema_error(path + ".brackets", "expected an array");
  BracketTable table;
  for (std::size_t k = 0; k < brs.size(); ++k) {
    std::string p = path + ".brackets[" + std::to_string(k) + "]";
    std::size_t a = index(field(brs[k], "i", p), p + ".i", n), b = index(field(brs[k], "j", p), p + ".j", n);
    if (table.count({a, b})) schema_error(p, "duplicate entry for (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
    table[{a, b}] = vec(field(brs[k], "value", p), p + ".value", n);
  }
  return make_lsa(std::move(ns), std::move(ps), table);
}

// ---------------------------------------------------------------- forms and cocycles

inline Json form_json(const LieSuperalgebra& l, const BilinearForm& b) {
  return {{"gram", matrix_json(b.gram)}, {"parity", to_string(form_parity(l, b))}};
}

inline BilinearForm form_from_json(const Json& j, std::size_t n, const std::string& path = "$") {
  return {json_detail::matrix(json_detail::field(j, "gram", path), path + ".gram", n, n)};
}

inline Json cocycle_json(const Cocycle2& w) {
  Json g = Json::array();
  for (const auto& m : w.grams) g.push_back(matrix_json(m));
  return {{"grams", g}, {"value_parities", w.value_parities}};
}

inline Cocycle2 cocycle_from_json(const Json& j, std::size_t n, const std::string& path = "$") {
  using namespace json_detail;
  const Json& gs = field(j, "grams", path);
  const Json& ps = field(j, "value_parities", path);
  if (!gs.is_array() || !ps.is_array() || gs.size() != ps.size()) schema_error(path, "grams and value_parities must be arrays of equal length");
  Cocycle2 w;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    w.grams.push_back(matrix(gs[k], path + ".grams[" + std::to_string(k) + "]", n, n));
    if (!ps[k].is_number_integer() || (ps[k] != 0 && ps[k] != 1)) schema_error(path + ".value_parities[" + std::to_string(k) + "]", "expected 0 or 1");
    w.value_parities.push_back(ps[k].get<int>());
  }
  return w;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace suplie
