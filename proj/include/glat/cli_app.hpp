#ifndef GLAT_CLI_APP_HPP
#define GLAT_CLI_APP_HPP

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glat/cartantype.hpp"
#include "glat/construct.hpp"
#include "glat/json_io.hpp"
#include "glat/prolong.hpp"
#include "glat/rootgrade.hpp"

namespace glat {
namespace cli {

struct CheckFailure {
  Json witness;
};

inline Json read_input(const std::string& path, std::istream& in) {
  Json j;
  if (path.empty()) {
    in >> j;
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open input file '" + path + "'");
    file >> j;
  }
  return j;
}

inline void write_output(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream file(path);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    file << j.dump(2) << "\n";
  }
}

inline std::pair<int, int> parse_degree_range(const std::string& spec) {
  auto dots = spec.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("degree range must look like a..b, got '" + spec + "'");
  int a = std::stoi(spec.substr(0, dots));
  int b = std::stoi(spec.substr(dots + 2));
  if (a > b) throw std::invalid_argument("empty degree range '" + spec + "'");
  return {a, b};
}

inline Json dims_json(const GradedLieAlgebra& g) {
  Json dims = Json::object();
  for (int p : g.degrees()) dims[std::to_string(p)] = g.dim(p);
  return dims;
}

inline Json prolong_report(const Tower& t) {
  Json j;
  j["base_depth"] = t.depth();
  Json layer_dims = Json::object();
  for (int k = 0; k <= t.top_layer(); ++k) layer_dims[std::to_string(k)] = t.layer(k).dim();
  j["layer_dims"] = layer_dims;
  j["status"] = t.status() == ProlongationStatus::terminated ? "terminated" : "truncated";
  GradedLieAlgebra g = t.to_algebra();
  j["dims"] = dims_json(g);
  j["algebra"] = algebra_to_json(g, std::nullopt, t.truncation_top());
  return j;
}

inline Json gradation_report(const RootGradation& rg) {
  Json j;
  j["type"] = type_name(rg.type);
  j["rank"] = rg.rank;
  j["pi1"] = rg.pi1;
  j["pi1_canonical"] = canonicalize_pi1(rg.type, rg.rank, rg.pi1);
  j["depth"] = rg.depth;
  Json dims = Json::object();
  for (const auto& [p, d] : rg.dims) dims[std::to_string(p)] = d;
  j["dims"] = dims;
  j["dim_g0"] = rg.dim_g0();
  j["total_dim"] = rg.total_dim();
  j["fundamental"] = rg.fundamental;
  return j;
}

// --- reproduction drivers ---------------------------------------------------

inline Json reproduce_prop83(int max_size, std::ostream& log) {
  Json rows = Json::array();
  bool all = true;
  for (int m = 1; m <= max_size; ++m)
    for (int n = 1; n <= max_size; ++n) {
      FreePseudoProductFgla pp = free_pseudoproduct_fgla(m, n, 3);
      std::vector<int> got{pp.algebra.dim(-1), pp.algebra.dim(-2), pp.algebra.dim(-3)};
      std::vector<int> expected{m + n, m * n, m * n * (m + n + 2) / 2};
      bool pass = got == expected;
      all = all && pass;
      Json row;
      row["case"] = "(" + std::to_string(m) + "," + std::to_string(n) + ",3)";
      row["expected"] = expected;
      row["got"] = got;
      row["pass"] = pass;
      rows.push_back(row);
      log << (pass ? "PASS" : "FAIL") << " (" << m << "," << n << ",3) dims " << got[0] << ","
          << got[1] << "," << got[2] << "\n";
    }
  return Json{{"target", "prop8.3"}, {"rows", rows}, {"all_pass", all}};
}

inline std::map<int, int> tower_dims(const Tower& t) {
  std::map<int, int> dims;
  for (int p : t.base().degrees()) dims[p] = t.base().dim(p);
  for (int k = 0; k <= t.top_layer(); ++k)
    if (t.layer(k).dim() > 0) dims[k] = t.layer(k).dim();
  return dims;
}

inline Json reproduce_thm71(std::ostream& log) {
  Json rows = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool pass, const Json& detail) {
    all = all && pass;
    rows.push_back(Json{{"case", name}, {"pass", pass}, {"detail", detail}});
    log << (pass ? "PASS " : "FAIL ") << name << "\n";
  };

  {  // free (2,2) tracks K(1)
    Tower t = truncated_prolongation(free_fgla(2, 2).algebra, std::nullopt, 3);
    bool pass = t.status() == ProlongationStatus::truncated;
    std::map<int, int> dims = tower_dims(t);
    for (int p = -2; p <= 3; ++p) pass = pass && dims[p] == static_cast<int>(k_layer(1, p).dim());
    record("free (2,2) ~ K(1) through degree 3", pass, Json{{"layer_dims", t.layer_dims()}});
  }
  {  // free (3,2) is the (B3, {a3}) gradation
    Tower t = truncated_prolongation(free_fgla(3, 2).algebra, std::nullopt, 5);
    RootGradation rg = grade_by_marks(SimpleType::B, 3, {3});
    bool pass = t.status() == ProlongationStatus::terminated;
    std::map<int, int> dims = tower_dims(t);
    for (int p = -rg.depth; p <= rg.depth; ++p) pass = pass && dims[p] == rg.dim(p);
    record("free (3,2) ~ (B3,{a3})", pass, Json{{"layer_dims", t.layer_dims()}});
  }
  {  // free (2,3) is the (G2, {a1}) gradation
    Tower t = truncated_prolongation(free_fgla(2, 3).algebra, std::nullopt, 5);
    RootGradation rg = grade_by_marks(SimpleType::G2, 2, {1});
    bool pass = t.status() == ProlongationStatus::terminated;
    std::map<int, int> dims = tower_dims(t);
    for (int p = -rg.depth; p <= rg.depth; ++p) pass = pass && dims[p] == rg.dim(p);
    record("free (2,3) ~ (G2,{a1})", pass, Json{{"layer_dims", t.layer_dims()}});
  }
  for (auto [n, mu] : {std::pair{3, 3}, {2, 4}, {4, 3}}) {  // vanishing first layer
    Tower t = truncated_prolongation(free_fgla(n, mu).algebra, std::nullopt, 1);
    bool pass = t.layer(1).dim() == 0;
    record("free (" + std::to_string(n) + "," + std::to_string(mu) + ") first layer vanishes", pass,
           Json{{"layer_dims", t.layer_dims()}});
  }
  return Json{{"target", "thm7.1"}, {"rows", rows}, {"all_pass", all}};
}

inline Json reproduce_thm81(std::ostream& log) {
  Json rows = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool pass, const Json& detail) {
    all = all && pass;
    rows.push_back(Json{{"case", name}, {"pass", pass}, {"detail", detail}});
    log << (pass ? "PASS " : "FAIL ") << name << "\n";
  };

  for (auto [m, n] : {std::pair{1, 2}, {2, 2}, {2, 3}}) {  // depth 2, restricted
    FreePseudoProductFgla pp = free_pseudoproduct_fgla(m, n, 2);
    Tower t = truncated_prolongation(pp.algebra, pp.pp, m + n + 2);
    RootGradation rg = grade_by_marks(SimpleType::A, m + n, {m, m + 1});
    bool pass = t.status() == ProlongationStatus::terminated;
    pass = pass && t.layer(0).dim() == m * m + n * n;
    std::map<int, int> dims = tower_dims(t);
    for (int p = -rg.depth; p <= rg.depth; ++p) pass = pass && dims[p] == rg.dim(p);
    record("pp (" + std::to_string(m) + "," + std::to_string(n) + ",2) ~ (A" +
               std::to_string(m + n) + ",{a" + std::to_string(m) + ",a" + std::to_string(m + 1) +
               "})",
           pass, Json{{"layer_dims", t.layer_dims()}});
  }
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {  // depth 3: no positive part
    FreePseudoProductFgla pp = free_pseudoproduct_fgla(m, n, 3);
    Tower t = truncated_prolongation(pp.algebra, pp.pp, 1);
    bool pass = t.layer(1).dim() == 0;
    record("pp (" + std::to_string(m) + "," + std::to_string(n) + ",3) first layer vanishes", pass,
           Json{{"layer_dims", t.layer_dims()}});
  }
  {  // unrestricted prolongation of pp (2,1,2) tracks W(3;(1,2,2))
    FreePseudoProductFgla pp = free_pseudoproduct_fgla(2, 1, 2);
    Tower t = truncated_prolongation(pp.algebra, std::nullopt, 1);
    bool pass = t.status() == ProlongationStatus::truncated;
    std::map<int, int> dims = tower_dims(t);
    for (int p = -2; p <= 1; ++p)
      pass = pass && dims[p] == static_cast<int>(w_layer(3, {1, 2, 2}, p).dim());
    record("pp (2,1,2) unrestricted ~ W(3;(1,2,2))", pass, Json{{"layer_dims", t.layer_dims()}});
  }
  {  // unrestricted prolongation of pp (1,1,2) tracks K(1)
    FreePseudoProductFgla pp = free_pseudoproduct_fgla(1, 1, 2);
    Tower t = truncated_prolongation(pp.algebra, std::nullopt, 3);
    bool pass = t.status() == ProlongationStatus::truncated;
    std::map<int, int> dims = tower_dims(t);
    for (int p = -2; p <= 3; ++p) pass = pass && dims[p] == static_cast<int>(k_layer(1, p).dim());
    record("pp (1,1,2) unrestricted ~ K(1)", pass, Json{{"layer_dims", t.layer_dims()}});
  }
  return Json{{"target", "thm8.1"}, {"rows", rows}, {"all_pass", all}};
}

// --- main entry --------------------------------------------------------------

inline int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"exact computations with fundamental graded Lie algebras and their prolongations"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct an algebra and print its JSON");
  build->require_subcommand(1);
  std::string build_out;
  build->add_option("--out", build_out, "output file (default stdout)");
  int b_n = 0, b_mu = 0, b_m = 0, b_k = 0;
  auto* b_free = build->add_subcommand("free", "free algebra of type (n,mu)");
  b_free->add_option("n", b_n)->required();
  b_free->add_option("mu", b_mu)->required();
  auto* b_univ = build->add_subcommand("universal", "wedge-recursion algebra b(V,mu)");
  b_univ->add_option("n", b_n)->required();
  b_univ->add_option("mu", b_mu)->required();
  auto* b_pp = build->add_subcommand("pp", "free pseudo-product algebra of type (m,n,mu)");
  b_pp->add_option("m", b_m)->required();
  b_pp->add_option("n", b_n)->required();
  b_pp->add_option("mu", b_mu)->required();
  auto* b_contact = build->add_subcommand("contact", "contact algebra of order k, bidegree (n,m)");
  b_contact->add_option("k", b_k)->required();
  b_contact->add_option("n", b_n)->required();
  b_contact->add_option("m", b_m)->required();
  auto* b_model = build->add_subcommand("model3", "explicit (m,n,3) model");
  b_model->add_option("m", b_m)->required();
  b_model->add_option("n", b_n)->required();

  // prolong
  auto* prolong = app.add_subcommand("prolong", "compute prolongation layers of an algebra");
  int p_max = 3;
  bool p_restricted = false;
  std::string p_in, p_out;
  prolong->add_option("--max-degree", p_max, "highest layer to compute")->required();
  prolong->add_flag("--pseudo-product", p_restricted,
                    "restrict to derivations preserving the pseudo-product");
  prolong->add_option("--in", p_in, "input file (default stdin)");
  prolong->add_option("--out", p_out, "output file (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "verify the structural identities of an algebra");
  std::string c_in, c_out;
  check->add_option("--in", c_in, "input file (default stdin)");
  check->add_option("--out", c_out, "output file (default stdout)");

  // simple-gradation
  auto* grad = app.add_subcommand("simple-gradation", "graded dimensions of a simple Lie algebra");
  std::string g_type;
  int g_rank = 0;
  std::vector<int> g_cross;
  std::string g_out;
  grad->add_option("--type", g_type, "A, B, C, D or G")->required();
  grad->add_option("--rank", g_rank)->required();
  grad->add_option("--cross", g_cross, "crossed nodes (repeatable)")->required();
  grad->add_option("--out", g_out, "output file (default stdout)");

  // cartan
  auto* cartan = app.add_subcommand("cartan", "layer dimensions of W(m;s) or K(n)");
  cartan->require_subcommand(1);
  std::string ct_degrees = "-2..3", ct_out;
  int ct_vars = 0, ct_n = 0;
  std::vector<int> ct_weights;
  cartan->add_option("--out", ct_out, "output file (default stdout)");
  auto* cartan_w = cartan->add_subcommand("W", "weighted polynomial vector fields");
  cartan_w->add_option("--vars", ct_vars)->required();
  cartan_w->add_option("--weights", ct_weights)->delimiter(',')->required();
  cartan_w->add_option("--degrees", ct_degrees, "range a..b");
  auto* cartan_k = cartan->add_subcommand("K", "contact algebra");
  cartan_k->add_option("--n", ct_n)->required();
  cartan_k->add_option("--degrees", ct_degrees, "range a..b");

  // compare
  auto* compare = app.add_subcommand("compare", "compare the graded dimensions of two reports");
  std::string cmp_left, cmp_right;
  compare->add_option("--left", cmp_left)->required();
  compare->add_option("--right", cmp_right)->required();

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "re-run a classification computation");
  std::string r_target;
  int r_max = 4;
  reproduce->add_option("target", r_target, "thm7.1, thm8.1 or prop8.3")->required();
  reproduce->add_option("--max", r_max, "size bound for prop8.3");

  std::vector<const char*> argv;
  argv.push_back("glat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) {
      Json j;
      if (b_free->parsed()) {
        FreeFgla f = free_fgla(b_n, b_mu);
        j = algebra_to_json(f.algebra);
      } else if (b_univ->parsed()) {
        j = algebra_to_json(universal_fgla(b_n, b_mu));
      } else if (b_pp->parsed()) {
        FreePseudoProductFgla pp = free_pseudoproduct_fgla(b_m, b_n, b_mu);
        j = algebra_to_json(pp.algebra, pp.pp);
      } else if (b_contact->parsed()) {
        FreePseudoProductFgla c = contact_algebra(b_k, b_n, b_m);
        j = algebra_to_json(c.algebra, c.pp);
      } else {
        FreePseudoProductFgla md = model_mn3(b_m, b_n);
        j = algebra_to_json(md.algebra, md.pp);
      }
      write_output(j, build_out, out);
      return 0;
    }

    if (prolong->parsed()) {
      Json input = read_input(p_in, in);
      GradedLieAlgebra m = algebra_from_json(input);
      std::optional<PseudoProduct> pp;
      if (p_restricted) {
        pp = pseudo_product_from_json(input, m.dim(-1));
        if (!pp)
          throw std::invalid_argument("--pseudo-product requires a pseudo_product block in the input");
      }
      Tower t = truncated_prolongation(m, pp, p_max);
      write_output(prolong_report(t), p_out, out);
      return 0;
    }

    if (check->parsed()) {
      Json input = read_input(c_in, in);
      GradedLieAlgebra g = algebra_from_json(input);
      std::optional<int> top = truncation_from_json(input);
      Json report;
      bool hard_fail = false;
      Json witness = Json::object();

      JacobiReport jac = check_jacobi(g, top);
      report["jacobi"] = jac.pass ? "pass" : "fail";
      if (!jac.pass) {
        hard_fail = true;
        witness["jacobi_triple"] = Json{{"p", jac.p}, {"i", jac.i}, {"q", jac.q},
                                        {"j", jac.j},  {"r", jac.r}, {"k", jac.k}};
        witness["residual"] = vec_to_json(jac.residual);
      }
      report["antisymmetry"] = "structural";
      bool negative_only = g.degrees().empty() || g.top_degree() < 0;
      if (negative_only) {
        bool fund = is_fundamental(g);
        report["fundamental"] = fund;
        if (fund) report["nondegenerate"] = is_nondegenerate(g);
      }
      auto pp = pseudo_product_from_json(input, g.dim(-1));
      if (pp) {
        bool ok = check_pseudo_product(g, *pp);
        report["pseudo_product"] = ok ? "pass" : "fail";
        if (!ok) {
          hard_fail = true;
          witness["pseudo_product"] = "e/f do not split g_-1 into abelian subspaces";
        }
      }
      if (hard_fail) report["witness"] = witness;
      write_output(report, c_out, out);
      return hard_fail ? 2 : 0;
    }

    if (grad->parsed()) {
      RootGradation rg = grade_by_marks(type_from_name(g_type), g_rank, g_cross);
      write_output(gradation_report(rg), g_out, out);
      return 0;
    }

    if (cartan->parsed()) {
      auto [lo, hi] = parse_degree_range(ct_degrees);
      Json j;
      Json dims = Json::object();
      if (cartan_w->parsed()) {
        j["family"] = "W";
        j["vars"] = ct_vars;
        j["weights"] = ct_weights;
        for (int p = lo; p <= hi; ++p)
          dims[std::to_string(p)] = w_layer(ct_vars, ct_weights, p).dim();
      } else {
        j["family"] = "K";
        j["n"] = ct_n;
        if (lo < -2) throw std::invalid_argument("contact layers start at degree -2");
        for (int p = lo; p <= hi; ++p) dims[std::to_string(p)] = k_layer(ct_n, p).dim();
      }
      j["dims"] = dims;
      write_output(j, ct_out, out);
      return 0;
    }

    if (compare->parsed()) {
      Json left = read_input(cmp_left, in);
      Json right = read_input(cmp_right, in);
      auto dims_of = [](const Json& j) -> Json {
        if (j.contains("dims")) return j.at("dims");
        if (j.contains("algebra")) return j.at("algebra").at("dims");
        throw std::invalid_argument("compare: input carries no dims");
      };
      Json ld = dims_of(left), rd = dims_of(right);
      Json mismatches = Json::array();
      for (const auto& [key, value] : ld.items())
        if (!rd.contains(key) || rd.at(key) != value) mismatches.push_back(key);
      for (const auto& [key, value] : rd.items())
        if (!ld.contains(key)) mismatches.push_back(key);
      bool equal = mismatches.empty();
      write_output(Json{{"equal", equal}, {"left", ld}, {"right", rd}, {"mismatches", mismatches}},
                   "", out);
      return equal ? 0 : 2;
    }

    if (reproduce->parsed()) {
      Json j;
      if (r_target == "prop8.3") {
        j = reproduce_prop83(r_max, err);
      } else if (r_target == "thm7.1") {
        j = reproduce_thm71(err);
      } else if (r_target == "thm8.1") {
        j = reproduce_thm81(err);
      } else {
        throw std::invalid_argument("unknown reproduce target '" + r_target + "'");
      }
      write_output(j, "", out);
      return j.at("all_pass").get<bool>() ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "error: invalid JSON input: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cli
}  // namespace glat

#endif
