#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "glat/cli_app.hpp"
#include "glat/construct.hpp"

using namespace glat;

namespace {

struct CliResult {
  int code;
  Json out;
  std::string raw_out, raw_err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::cli_main(args, in, out, err);
  CliResult r{code, Json(), out.str(), err.str()};
  if (!r.raw_out.empty() && (r.raw_out[0] == '{' || r.raw_out[0] == '['))
    r.out = Json::parse(r.raw_out);
  return r;
}

}  // namespace

TEST_CASE("build emits the documented schema") {
  CliResult r = run({"build", "free", "2", "3"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.at("degrees") == Json::array({-3, -2, -1}));
  REQUIRE(r.out.at("dims").at("-1") == 2);
  REQUIRE(r.out.at("dims").at("-3") == 2);
  REQUIRE(r.out.contains("brackets"));

  CliResult pp = run({"build", "pp", "2", "1", "2"});
  REQUIRE(pp.code == 0);
  REQUIRE(pp.out.at("pseudo_product").at("e").size() == 2);
  REQUIRE(pp.out.at("pseudo_product").at("f").size() == 1);
}

TEST_CASE("JSON round trip: build output feeds prolong and check unchanged") {
  CliResult built = run({"build", "free", "2", "3"});
  REQUIRE(built.code == 0);

  SECTION("round trip through the parser is the identity") {
    GradedLieAlgebra g = algebra_from_json(built.out);
    REQUIRE(algebra_to_json(g) == built.out);
  }
  SECTION("prolong consumes it") {
    CliResult r = run({"prolong", "--max-degree", "5"}, built.raw_out);
    REQUIRE(r.code == 0);
    REQUIRE(r.out.at("status") == "terminated");
    REQUIRE(r.out.at("layer_dims") ==
            Json{{"0", 4}, {"1", 2}, {"2", 1}, {"3", 2}, {"4", 0}});
    REQUIRE(r.out.at("dims").at("3") == 2);
  }
  SECTION("check passes it") {
    CliResult r = run({"check"}, built.raw_out);
    REQUIRE(r.code == 0);
    REQUIRE(r.out.at("jacobi") == "pass");
    REQUIRE(r.out.at("fundamental") == true);
  }
}

TEST_CASE("check flags a corrupted algebra with a witness and exit code 2") {
  Json j = algebra_to_json(free_fgla(3, 3).algebra);
  for (auto& entry : j.at("brackets")) {
    if (entry.at("p") == -2 && entry.at("i") == 0 && entry.at("q") == -1 && entry.at("j") == 2) {
      entry.at("out")[0] = "9/2";
      break;
    }
  }
  CliResult r = run({"check"}, j.dump());
  REQUIRE(r.code == 2);
  REQUIRE(r.out.at("jacobi") == "fail");
  REQUIRE(r.out.contains("witness"));
}

TEST_CASE("prolong --pseudo-product restricts the tower") {
  CliResult built = run({"build", "pp", "2", "2", "2"});
  CliResult restricted = run({"prolong", "--max-degree", "4", "--pseudo-product"}, built.raw_out);
  REQUIRE(restricted.code == 0);
  REQUIRE(restricted.out.at("layer_dims") == Json{{"0", 8}, {"1", 4}, {"2", 4}, {"3", 0}});
  CliResult missing = run({"prolong", "--max-degree", "2", "--pseudo-product"},
                          run({"build", "free", "2", "2"}).raw_out);
  REQUIRE(missing.code == 1);
}

TEST_CASE("simple-gradation and compare close the classification loop") {
  CliResult built = run({"build", "free", "2", "3"});
  CliResult prolonged = run({"prolong", "--max-degree", "5"}, built.raw_out);

  std::string prolong_file = "/tmp/glat_test_prolong.json";
  std::string grad_file = "/tmp/glat_test_grad.json";
  {
    std::ofstream f(prolong_file);
    f << prolonged.raw_out;
  }
  CliResult grad = run({"simple-gradation", "--type", "G", "--rank", "2", "--cross", "1"});
  REQUIRE(grad.code == 0);
  REQUIRE(grad.out.at("depth") == 3);
  {
    std::ofstream f(grad_file);
    f << grad.raw_out;
  }
  CliResult cmp = run({"compare", "--left", prolong_file, "--right", grad_file});
  REQUIRE(cmp.code == 0);
  REQUIRE(cmp.out.at("equal") == true);

  CliResult other = run({"simple-gradation", "--type", "B", "--rank", "3", "--cross", "3"});
  {
    std::ofstream f(grad_file);
    f << other.raw_out;
  }
  CliResult bad = run({"compare", "--left", prolong_file, "--right", grad_file});
  REQUIRE(bad.code == 2);
  REQUIRE(bad.out.at("equal") == false);
}

TEST_CASE("cartan dimension reports") {
  CliResult w = run({"cartan", "W", "--vars", "3", "--weights", "1,2,2", "--degrees", "-2..1"});
  REQUIRE(w.code == 0);
  REQUIRE(w.out.at("dims") == Json{{"-2", 2}, {"-1", 3}, {"0", 7}, {"1", 9}});
  CliResult k = run({"cartan", "K", "--n", "1", "--degrees", "-2..3"});
  REQUIRE(k.code == 0);
  REQUIRE(k.out.at("dims") ==
          Json{{"-2", 1}, {"-1", 2}, {"0", 4}, {"1", 6}, {"2", 9}, {"3", 12}});
}

TEST_CASE("reproduce targets") {
  CliResult p83 = run({"reproduce", "prop8.3", "--max", "2"});
  REQUIRE(p83.code == 0);
  REQUIRE(p83.out.at("all_pass") == true);
  REQUIRE(p83.out.at("rows").size() == 4);
  REQUIRE(p83.raw_err.find("PASS") != std::string::npos);

  CliResult t71 = run({"reproduce", "thm7.1"});
  REQUIRE(t71.code == 0);
  REQUIRE(t71.out.at("all_pass") == true);

  CliResult t81 = run({"reproduce", "thm8.1"});
  REQUIRE(t81.code == 0);
  REQUIRE(t81.out.at("all_pass") == true);
}

TEST_CASE("invalid arguments exit with code 1") {
  REQUIRE(run({"unknown-command"}).code == 1);
  REQUIRE(run({"build", "free", "1", "2"}).code == 1);           // n < 2 rejected
  REQUIRE(run({"simple-gradation", "--type", "E", "--rank", "6", "--cross", "1"}).code == 1);
  REQUIRE(run({"prolong", "--max-degree", "2"}, "not json").code == 1);
}
