#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "shamsuddin/cli.hpp"

using namespace shamsuddin;
using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = static_cast<int>(run_command_line(args, out, err));
  return {status, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = run_cli(args);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("simple-check") {
  auto r = run_cli({"simple-check", "--a", "x", "--b", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "Simple\n");

  r = run_cli({"simple-check", "--a", "x", "--b", "0"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("NotSimple\n", 0) == 0);
  CHECK(r.out.find("witness: y\n") != std::string::npos);
  CHECK(r.out.find("cofactor: x\n") != std::string::npos);

  const json j = run_json({"simple-check", "--derivation", "dx=1; dy=3*x^2", "--verify"});
  CHECK(j["verdict"] == "NotSimple");
  CHECK(j["witness"]["f"] == "-x^3 + y");
  CHECK(j["witness"]["cofactor"] == "0");
  CHECK(j["verified"] == true);

  const json s = run_json({"simple-check", "--a", "x", "--b", "1"});
  CHECK(s["verdict"] == "Simple");
  CHECK(s["witness"].is_null());
  CHECK(s["verified"] == true);
}

TEST_CASE("isotropy") {
  const json j = run_json({"isotropy", "--a", "x", "--b", "1"});
  CHECK(j["conclusion"] == "trivial");
  CHECK(j["verified"] == true);
  REQUIRE(j["steps"].size() == 4);
  for (const auto& s : j["steps"]) CHECK(s["verified"] == true);

  const Result r = run_cli({"isotropy", "--a", "x", "--b", "0"});
  CHECK(r.status == 1);
  CHECK(r.err.find("derivation not simple") != std::string::npos);
  const json e = run_json({"isotropy", "--a", "x", "--b", "0"});
  CHECK(e["status"] == 1);
  CHECK(e["witness"]["f"] == "y");
  CHECK(e["witness"]["cofactor"] == "x");
}

TEST_CASE("isotropy-brute") {
  const json j = run_json({"isotropy-brute", "--derivation", "shamsuddin a=x; b=1"});
  CHECK(j["count"] == 1);
  CHECK(j["maps"][0] == "(x, y)");
  CHECK(j["verified"][0] == true);

  const Result r = run_cli({"isotropy-brute", "--derivation", "dx=1; dy=0", "--deg-bound", "1", "--grid", "0, 1"});
  CHECK(r.status == 0);
  CHECK(r.out.find("(x + 1, y)") != std::string::npos);

  CHECK(run_cli({"isotropy-brute", "--derivation", "dx=1; dy=0", "--grid", "1/0"}).status == 2);
  CHECK(run_cli({"isotropy-brute", "--derivation", "dx=1; dy=0", "--budget", "10"}).status == 1);
  CHECK(run_cli({"isotropy-brute", "--derivation", "dx=1; dy=0", "--deg-bound", "0"}).status == 2);
}

TEST_CASE("commute-check") {
  auto r = run_cli({"commute-check", "--derivation", "dx=1; dy=0", "--map", "(x+y^2, y)"});
  CHECK(r.status == 0);
  CHECK(r.out == "true\n");
  r = run_cli({"commute-check", "--derivation", "dx=1; dy=0", "--map", "(y, x)"});
  CHECK(r.status == 0);
  CHECK(r.out == "false\n");
}

TEST_CASE("invariant-check") {
  auto r = run_cli({"invariant-check", "--derivation", "dx=1; dy=x*y", "--poly", "y"});
  CHECK(r.out == "invariant\ncofactor: x\n");
  r = run_cli({"invariant-check", "--derivation", "dx=1; dy=x*y + 1", "--poly", "y"});
  CHECK(r.out == "not invariant\n");
  CHECK(run_cli({"invariant-check", "--derivation", "dx=1; dy=x*y", "--poly", "0"}).status == 1);
}

TEST_CASE("dynamics subcommands") {
  json j = run_json({"dyn-degree", "--map", "(x + y^2, y)", "--n-max", "4"});
  CHECK(j["degree_sequence"] == json::array({2, 2, 2, 2}));
  CHECK(j["bounded"] == true);
  CHECK(j["delta_estimate"] == "1");

  j = run_json({"fixed-points", "--map", "(-x, -y)"});
  CHECK(j["rational_points"] == json::array({json::array({"0", "0"})}));
  CHECK(j["closure_verdict"] == "ExistsOverClosure");
  CHECK(j["verified"][0] == true);
  CHECK(run_cli({"fixed-points", "--map", "(x, y)"}).status == 1);

  CHECK(run_cli({"order", "--map", "(y, -x)"}).out == "order: 4\n");
  CHECK(run_cli({"order", "--map", "(x + 1, y)", "--n-max", "5"}).out == "order: none up to 5\n");

  j = run_json({"validate-aut", "--map", "(x + 1, 2*y)"});
  CHECK(j["verdict"] == "accepted");
  CHECK(j["jacobian_det"] == "2");
  CHECK(j["inverse"] == "(x - 1, 1/2*y)");
  CHECK(j["verified"] == true);
  j = run_json({"validate-aut", "--map", "(x^2, y)"});
  CHECK(j["verdict"] == "rejected");
  CHECK(j["jacobian_det"] == "2*x");
}

TEST_CASE("exit codes for bad input") {
  auto r = run_cli({"simple-check", "--a", "x^", "--b", "1"});
  CHECK(r.status == 2);
  CHECK(r.err.find("1..2") != std::string::npos);
  CHECK(run_cli({"simple-check", "--a", "x*y", "--b", "1"}).status == 2);
  CHECK(run_cli({"simple-check", "--b", "1"}).status == 2);
  CHECK(run_cli({"commute-check", "--derivation", "dx=1; dy=0", "--map", "(x)"}).status == 2);
  CHECK(run_cli({"nonsense"}).status == 2);
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"dyn-degree", "--map", "(x, y)", "--format", "xml"}).status == 2);
  // Not of Shamsuddin shape: an operation precondition, not a parse error.
  CHECK(run_cli({"simple-check", "--derivation", "dx=y; dy=x"}).status == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"isotropy-brute", "--derivation", "dx=1; dy=0", "--format", "json"};
  CHECK(run_cli(args).out == run_cli(args).out);
}
