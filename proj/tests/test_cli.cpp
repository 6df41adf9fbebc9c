#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "richgrass/cli.hpp"

using richgrass::run_cli;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
  json body;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  CliResult result{code, out.str(), err.str(), json()};
  if (!result.out.empty() && (result.out[0] == '{' || result.out[0] == '['))
    result.body = json::parse(result.out);
  return result;
}

}  // namespace

TEST_CASE("poset meet subcommand") {
  const CliResult r = run({"poset", "meet", "--grassmannian", "2,4", "--a", "1,4",
                           "--b", "2,3"});
  CHECK(r.code == 0);
  CHECK(r.body["result"] == "1,3");
  CHECK(r.body["context"]["d"] == 2);
  CHECK(r.body["context"]["n"] == 4);
  CHECK(r.body["method"] == "poset meet");
}

TEST_CASE("mult all subcommand") {
  const CliResult r = run({"mult", "--grassmannian", "2,4", "--w", "2,4", "--v",
                           "1,2", "--tau", "1,2", "--method", "all"});
  CHECK(r.code == 0);
  CHECK(r.body["result"]["recursive"] == 2);
  CHECK(r.body["result"]["product"] == 2);
  CHECK(r.body["result"]["determinantal"] == 2);
  CHECK(r.body["result"]["oracle"] == 2);
  CHECK(r.body["result"]["agree"] == true);
}

TEST_CASE("smt count subcommand") {
  const CliResult r = run({"smt", "count", "--grassmannian", "2,4", "--w", "3,4",
                           "--v", "1,2", "--m", "2"});
  CHECK(r.code == 0);
  CHECK(r.body["result"]["count"] == 20);
}

TEST_CASE("straighten subcommand") {
  const CliResult r = run({"straighten", "--grassmannian", "2,4", "--monomial",
                           "1,4;2,3"});
  CHECK(r.code == 0);
  REQUIRE(r.body["result"].size() == 2);
  CHECK(r.body["result"][0]["factors"] == json::array({"2,4", "1,3"}));
  CHECK(r.body["result"][0]["coefficient"] == 1);
  CHECK(r.body["result"][1]["factors"] == json::array({"3,4", "1,2"}));
  CHECK(r.body["result"][1]["coefficient"] == -1);
}

TEST_CASE("tangent and smooth subcommands") {
  const CliResult t = run({"tangent", "--grassmannian", "2,4", "--w", "2,4", "--v",
                           "1,2", "--tau", "1,2"});
  CHECK(t.code == 0);
  CHECK(t.body["result"].size() == 4);
  CHECK(t.body["result"][0]["removed"] == 1);
  CHECK(t.body["result"][0]["added"] == 3);
  CHECK(t.body["result"][0]["reflected"] == "2,3");

  const CliResult s = run({"smooth", "--grassmannian", "2,4", "--w", "2,4", "--v",
                           "1,2", "--tau", "1,2"});
  CHECK(s.code == 0);
  CHECK(s.body["result"]["smooth"] == false);
  CHECK(s.body["result"]["schubert_smooth"] == false);
  CHECK(s.body["result"]["opposite_smooth"] == true);
  CHECK(s.body["result"]["dimension"] == 3);
  CHECK(s.body["result"]["tangent_dimension"] == 4);
}

TEST_CASE("hilbert subcommand") {
  const CliResult r =
      run({"hilbert", "--grassmannian", "2,4", "--w", "3,4", "--v", "1,2"});
  CHECK(r.code == 0);
  CHECK(r.body["result"]["degree"] == 4);
  CHECK(r.body["result"]["variety_degree"] == 2);
}

TEST_CASE("error paths and exit codes") {
  // Empty variety: domain error, code 1.
  const CliResult empty = run({"smt", "count", "--grassmannian", "2,4", "--w",
                               "1,3", "--v", "2,3", "--m", "1"});
  CHECK(empty.code == 1);
  CHECK(empty.body["code"] == 1);

  // tau outside the interval: domain error, code 1.
  const CliResult outside = run({"mult", "--grassmannian", "2,4", "--w", "1,4",
                                 "--v", "1,2", "--tau", "2,4"});
  CHECK(outside.code == 1);

  // Malformed index: argument error, code 2.
  const CliResult malformed = run({"poset", "meet", "--grassmannian", "2,4", "--a",
                                   "1,x", "--b", "2,3"});
  CHECK(malformed.code == 2);
  CHECK(malformed.body["code"] == 2);

  // Unknown subcommand: parse error, code 2.
  const CliResult unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK_FALSE(unknown.err.empty());
}

TEST_CASE("text format") {
  const CliResult r = run({"poset", "meet", "--grassmannian", "2,4", "--a", "1,4",
                           "--b", "2,3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,3\n");
}

TEST_CASE("selftest is deterministic for a fixed seed") {
  const std::vector<std::string> args{"selftest", "--grassmannian", "2,4",
                                      "--seed", "99"};
  const CliResult first = run(args);
  const CliResult second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.body["result"]["failed"] == 0);
}
