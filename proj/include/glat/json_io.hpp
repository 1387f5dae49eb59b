#ifndef GLAT_JSON_IO_HPP
#define GLAT_JSON_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glat/fgla.hpp"
#include "json.hpp"

namespace glat {

using Json = nlohmann::json;

inline Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const Rational& c : v) a.push_back(c.str());
  return a;
}

inline Vec vec_from_json(const Json& a) {
  Vec v;
  for (const auto& e : a) v.push_back(Rational::parse(e.get<std::string>()));
  return v;
}

inline Json matrix_rows_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

// Schema: {"degrees":[...], "dims":{"p":d}, "brackets":[{"p","i","q","j","out":["a/b",...]}],
//          "pseudo_product":{"e":[[..]],"f":[[..]]}?, "truncation_top":K?}
// Omitted bracket entries are zero; rationals are strings with "/1" dropped.
inline Json algebra_to_json(const GradedLieAlgebra& g,
                            const std::optional<PseudoProduct>& pp = std::nullopt,
                            std::optional<int> truncation_top = std::nullopt) {
  Json j;
  j["degrees"] = g.degrees();
  Json dims = Json::object();
  for (int p : g.degrees()) dims[std::to_string(p)] = g.dim(p);
  j["dims"] = dims;
  Json brackets = Json::array();
  for (const auto& [key, out] : g.table()) {
    Json entry;
    entry["p"] = key.p;
    entry["i"] = key.i;
    entry["q"] = key.q;
    entry["j"] = key.j;
    entry["out"] = vec_to_json(out);
    brackets.push_back(entry);
  }
  j["brackets"] = brackets;
  if (pp) {
    j["pseudo_product"] = Json{{"e", matrix_rows_to_json(pp->e.basis())},
                               {"f", matrix_rows_to_json(pp->f.basis())}};
  }
  if (truncation_top) j["truncation_top"] = *truncation_top;
  return j;
}

inline GradedLieAlgebra algebra_from_json(const Json& j) {
  if (!j.contains("degrees") || !j.contains("dims"))
    throw std::invalid_argument("algebra JSON: missing degrees/dims");
  std::map<int, int> dims;
  for (const auto& [key, value] : j.at("dims").items()) dims[std::stoi(key)] = value.get<int>();
  for (const auto& d : j.at("degrees"))
    if (!dims.count(d.get<int>())) throw std::invalid_argument("algebra JSON: degree without dim");
  GradedLieAlgebra g(dims);
  if (j.contains("brackets"))
    for (const auto& entry : j.at("brackets"))
      g.set_bracket(entry.at("p").get<int>(), entry.at("i").get<int>(), entry.at("q").get<int>(),
                    entry.at("j").get<int>(), vec_from_json(entry.at("out")));
  return g;
}

inline std::optional<PseudoProduct> pseudo_product_from_json(const Json& j, int dim_gm1) {
  if (!j.contains("pseudo_product")) return std::nullopt;
  const Json& pp = j.at("pseudo_product");
  auto rows_of = [&](const Json& arr) {
    std::vector<Vec> rows;
    for (const auto& r : arr) rows.push_back(vec_from_json(r));
    return rows;
  };
  return PseudoProduct{Subspace::from_spanning(dim_gm1, rows_of(pp.at("e"))),
                       Subspace::from_spanning(dim_gm1, rows_of(pp.at("f")))};
}

inline std::optional<int> truncation_from_json(const Json& j) {
  if (!j.contains("truncation_top")) return std::nullopt;
  return j.at("truncation_top").get<int>();
}

}  // namespace glat

#endif
