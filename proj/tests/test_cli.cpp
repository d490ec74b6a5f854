#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli/expr.hpp"
#include "cli/runner.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace spcli;
using gsalg::GaussianRational;
using gsalg::Parity;
using supercalc::GrassmannPoly;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), ("cannot open " + path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::vector<std::string> kCorpus = {
    "osp_2_2_finite_type", "osp_3_2_prolong",      "p_2_2_finite_type",
    "spin_w_2_0_finite_type", "spin_w_3_0_finite_type", "spin_w_4_0_finite_type",
    "gl_1_0_finite_type",  "osp_2_2_admissible",   "gl_2_2_admissible",
    "spin_w_3_0_admissible", "osp_2_2_h02",        "killing_metric_2_2",
    "killing_frame_1_1",   "flow_linear",          "flow_blowup",
    "decompose_2params",
};

} // namespace

TEST_CASE("expression parser: spec examples") {
  auto v = parse_expression("x1 + i*th1*th2", 2, 2);
  CHECK_FALSE(v.is_field);
  CHECK(v.fn.has_parity(Parity::Even));
  CHECK(v.fn.is_real_function()); // body is x1
  CHECK(v.fn.body() == supercalc::Poly::variable(2, 0));

  CHECK(parse_superfunction("th1*th1", 2, 2).is_zero());

  auto f = parse_vector_field("(x1^2)*D[x1] + th1*D[th1]", 2, 2);
  CHECK(f.parity() == Parity::Even);
  CHECK(f.coeff(0) == GrassmannPoly::coordinate(2, 2, 0) * GrassmannPoly::coordinate(2, 2, 0));
  CHECK(f.coeff(2) == GrassmannPoly::eta(2, 2, 0));
}

TEST_CASE("expression parser: errors carry positions; parity errors rejected") {
  try {
    parse_expression("x1 + * 2", 2, 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
  CHECK_THROWS_AS(parse_expression("x3", 2, 2), ParseError);
  CHECK_THROWS_AS(parse_expression("th9", 2, 2), ParseError);
  CHECK_THROWS_AS(parse_expression("D[x1] * D[x2]", 2, 2), ParseError);
  CHECK_THROWS_AS(parse_expression("D[x1] * x1", 2, 2), ParseError);
  CHECK_THROWS_AS(parse_expression("x1 + D[x1]", 2, 2), ParseError);
  // inhomogeneous field: odd coefficient on one slot, even on another
  CHECK_THROWS_AS(parse_vector_field("th1*D[x1] + x1*D[x2]", 2, 2), ParseError);
}

TEST_CASE("printer round-trip: parse(print(v)) == v") {
  for (const char* src :
       {"x1 + i*th1*th2", "1/2*x1^3 - 3*th2 + 2", "x1*x2*th1*th2 - i*x2", "(1/2+1/3*i)*x1",
        "0", "th1*th2 + x1^2"}) {
    auto g = parse_superfunction(src, 2, 2);
    CHECK(parse_superfunction(g.str(), 2, 2) == g);
  }
  for (const char* src : {"(x1^2)*D[x1] + th1*D[th1]", "D[th2]", "x2*D[x1] - x1*D[x2]"}) {
    auto f = parse_vector_field(src, 2, 2);
    CHECK(parse_vector_field(f.str(), 2, 2) == f);
  }
}

TEST_CASE("problem schema: strict validation") {
  auto parse = [](const std::string& text, const std::string& sub) {
    return parse_problem(ordered_json::parse(text), sub);
  };

  CHECK_THROWS_AS(parse(R"({"version":2,"task":{"name":"check"}})", "check"), ValidationError);
  CHECK_THROWS_AS(parse(R"({"version":1,"task":{"name":"check"},"bogus":1})", "check"),
                  ValidationError);
  CHECK_THROWS_AS(
      parse(R"({"version":1,"space":{"even":1,"odd":0,"junk":2},"task":{"name":"h02"}})", "h02"),
      ValidationError);
  CHECK_THROWS_AS(parse(R"({"version":1,"task":{"name":"prolong"}})", "prolong"),
                  ValidationError); // missing space
  CHECK_THROWS_AS(
      parse(R"({"version":1,"space":{"even":2,"odd":0},"task":{"name":"finite-type"}})",
            "prolong"),
      ValidationError); // name/subcommand mismatch
  CHECK_THROWS_AS(
      parse(
          R"({"version":1,"space":{"even":2,"odd":0},"algebra":{"builtin":"nope"},"task":{"name":"h02"}})",
          "h02"),
      ValidationError);
  // split inconsistent with the even dimension
  CHECK_THROWS_AS(
      parse(
          R"({"version":1,"space":{"even":2,"odd":0,"split":[2,1]},"algebra":{"builtin":"gl"},"task":{"name":"prolong"}})",
          "prolong"),
      ValidationError);
}

TEST_CASE("schema round-trip on the corpus: serialize(parse(spec)) == spec") {
  for (const auto& name : kCorpus) {
    ordered_json raw = ordered_json::parse(slurp(std::string(TESTS_DATA_DIR) + "/" + name + ".json"));
    ProblemSpec spec = parse_problem(raw, raw.at("task").at("name").get<std::string>());
    CHECK_MESSAGE(spec.to_json() == raw, name);
  }
}

TEST_CASE("golden reports: byte-identical, deterministic") {
  for (const auto& name : kCorpus) {
    ordered_json raw = ordered_json::parse(slurp(std::string(TESTS_DATA_DIR) + "/" + name + ".json"));
    ProblemSpec spec = parse_problem(raw, raw.at("task").at("name").get<std::string>());
    std::string once = run_problem(spec).dump(2) + "\n";
    std::string twice = run_problem(spec).dump(2) + "\n";
    CHECK_MESSAGE(once == twice, ("nondeterministic report for " + name));
    std::string golden = slurp(std::string(TESTS_DATA_DIR) + "/" + name + ".golden");
    CHECK_MESSAGE(once == golden, ("golden mismatch for " + name));
  }
}

TEST_CASE("spin_w space mismatch is a validation error") {
  ordered_json raw = ordered_json::parse(
      R"({"version":1,"space":{"even":3,"odd":4},"algebra":{"builtin":"spin_w","p":3,"q":0},
          "task":{"name":"h02"}})");
  ProblemSpec spec = parse_problem(raw, "h02");
  CHECK_THROWS_AS(run_problem(spec), ValidationError);
}

TEST_CASE("computation errors: degenerate inputs are reported, not crashed") {
  // degenerate custom form
  ordered_json raw = ordered_json::parse(
      R"({"version":1,"space":{"even":2,"odd":0},"algebra":{"builtin":"osp",
          "form":[["1","0"],["0","0"]]},"task":{"name":"h02"}})");
  ProblemSpec spec = parse_problem(raw, "h02");
  CHECK_THROWS_AS(run_problem(spec), ComputationError);

  // flow of a non-real field
  ordered_json raw2 = ordered_json::parse(
      R"({"version":1,"space":{"even":1,"odd":0},
          "task":{"name":"flow","field":"i*x1*D[x1]","points":[[1.0]],"steps":10}})");
  ProblemSpec spec2 = parse_problem(raw2, "flow");
  CHECK_THROWS_AS(run_problem(spec2), ComputationError);
}

TEST_CASE("custom algebra descriptors") {
  // span{E_{12}, E_{21}} closes to sl(2); its first prolongation is 0
  ordered_json raw = ordered_json::parse(R"({"version":1,"space":{"even":2,"odd":0},
    "algebra":{"custom":[
      {"parity":"even","matrix":[["0","1"],["0","0"]]},
      {"parity":"even","matrix":[["0","0"],["1","0"]]},
      {"parity":"even","matrix":[["1","0"],["0","-1"]]}]},
    "task":{"name":"prolong","kmax":3}})");
  ProblemSpec spec = parse_problem(raw, "prolong");
  ordered_json rep = run_problem(spec);
  CHECK(rep.at("results").at("levels")[0].at("dim").at("even").get<std::size_t>() == 3);

  // empty custom basis: the zero algebra, every level vanishes
  ordered_json raw0 = ordered_json::parse(R"({"version":1,"space":{"even":2,"odd":1},
    "algebra":{"custom":[]},"task":{"name":"prolong","kmax":4}})");
  ordered_json rep0 = run_problem(parse_problem(raw0, "prolong"));
  CHECK(rep0.at("results").at("vanishes_at").get<std::size_t>() == 0);
  for (const auto& l : rep0.at("results").at("levels"))
    CHECK(l.at("dim").at("even").get<std::size_t>() + l.at("dim").at("odd").get<std::size_t>() == 0);

  // gaussian rational entries in the wire format
  ordered_json rawg = ordered_json::parse(R"({"version":1,"space":{"even":1,"odd":1},
    "algebra":{"custom":[{"parity":"odd","matrix":[["0","1/2+1/3*i"],["2","0"]]}]},
    "task":{"name":"prolong","kmax":2}})");
  ordered_json repg = run_problem(parse_problem(rawg, "prolong"));
  CHECK(repg.at("results").at("levels")[0].at("dim").at("odd").get<std::size_t>() == 1);
}

TEST_CASE("binary exit codes: 0 ok, 2 validation, 3 computation") {
  std::string bin = SUPERPROLONG_BIN;
  std::string data = TESTS_DATA_DIR;
  auto run = [&](const std::string& cmd) {
    int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  CHECK(run(bin + " finite-type --spec " + data + "/osp_2_2_finite_type.json") == 0);
  CHECK(run(bin + " check") == 0);
  CHECK(run("echo '{\"version\":9}' | " + bin + " prolong") == 2);
  CHECK(run("echo '{\"version\":1,\"space\":{\"even\":1,\"odd\":0},\"task\":{\"name\":\"flow\","
            "\"field\":\"i*x1*D[x1]\",\"points\":[[1.0]],\"steps\":10}}' | " +
            bin + " flow") == 3);
}
