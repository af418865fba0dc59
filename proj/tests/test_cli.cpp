#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lo/cli.hpp"
#include "lo/json_io.hpp"
#include "lo/knot_group.hpp"

using namespace lo;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expect = kExitOk) {
  args.insert(args.begin(), {"--format", "json"});
  auto r = run(args);
  CHECK(r.code == expect);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--format", "xml", "group", "torus", "2", "3"}).code == kExitUsage);
  CHECK(run({"group", "torus", "2", "4"}).code == kExitUsage);
  CHECK(run({"group", "torus", "2"}).code == kExitUsage);
  CHECK(run({"group", "klein", "2", "3"}).code == kExitUsage);
  CHECK(run({"certify", "no-such-id"}).code == kExitUsage);
  CHECK(run({"cone", "--free", "--pos", "mu"}).code == kExitUsage);
  CHECK(run({"cone", "--free", "--pos", "a^"}).code == kExitUsage);
  CHECK_FALSE(run({"group", "torus", "2", "4"}).err.empty());
}

TEST_CASE("group output") {
  auto j = run_json({"group", "torus", "3", "5"});
  CHECK(j["schema"] == kSchemaVersion);
  CHECK(j["group"]["relator"] == "aaaBBBBB");
  CHECK(j["group"]["mu"] == "BBBaa");
  CHECK(j["group"]["framing"] == 15);
  CHECK(j["identities"]["all_equal"] == true);

  auto t = run_json({"group", "twisted", "1", "1"});
  CHECK(t["group"]["label"] == "T(3,5)^1");
  CHECK(t["identities"]["all_equal"] == true);
  CHECK(run({"group", "pretzel", "2"}).code == kExitOk);
  CHECK(run({"group", "twisted1", "2"}).code == kExitOk);
}

TEST_CASE("obstruct reports the merged set and its caveats") {
  auto j = run_json({"obstruct", "torus", "2", "3", "--radius", "4", "--N", "1..2", "--family-N", "1..2"});
  REQUIRE(j["obstructed"].size() == 1);
  CHECK(j["obstructed"][0]["text"] == "(5, inf)");
  CHECK(j["obstructed"][0]["provenance"] == "union");
  bool endpoint_caveat = false;
  for (const auto& c : j["caveats"]) endpoint_caveat |= c.get<std::string>().find("endpoint 5") == 0;
  CHECK(endpoint_caveat);

  auto p = run_json({"obstruct", "pretzel", "1", "--family-N", "1..2"});
  CHECK(p["obstructed"].back()["lo"] == "17");
  CHECK(p["obstructed"].back()["hi"] == "inf");
  auto t = run_json({"obstruct", "twisted1", "2", "--family-N", "1..2"});
  CHECK(t["obstructed"].back()["lo"] == "26");
}

TEST_CASE("certify") {
  CHECK(run({"certify", "--family", "pretzel", "--m", "0..2", "--N", "1..2"}).code == kExitOk);
  CHECK(run({"certify", "--family", "twisted1", "--k", "0..2", "--N", "1..2"}).code == kExitOk);
  CHECK(run({"certify", "--family", "torus", "--p", "2", "--q", "5", "--n", "1..2", "--N", "1..2"}).code == kExitOk);
  auto j = run_json({"certify", "torus-split-product", "--p", "3", "--q", "5"});
  CHECK(j["passed"] == j["total"]);
  auto list = run({"certify", "--list"});
  CHECK(list.code == kExitOk);
  CHECK(list.out.find("torus-split-product") != std::string::npos);
  CHECK(list.out.find("pretzel-case2") != std::string::npos);
}

TEST_CASE("cone exit codes") {
  CHECK(run({"cone", "--group", "torus:2:3", "--pos", "mu^6*lambda", "--neg", "mu^7*lambda", "--radius", "3"}).code ==
        kExitOk);
  CHECK(run({"cone", "--free", "--pos", "a", "--neg", "b", "--radius", "3"}).code == kExitSat);
  CHECK(run({"cone", "--free", "--pos", "a", "--pos", "A", "--radius", "2"}).code == kExitOk);
  CHECK(run({"cone", "--relator", "aaBBB", "--pos", "aaBBB", "--radius", "2"}).code == kExitOk);
  CHECK(run({"cone", "--group", "twisted1:1", "--pos", "a", "--neg", "b", "--radius", "2", "--budget-insertions",
             "0", "--quotient-degree", "1"})
            .code == kExitInconclusive);

  auto j = run_json({"cone", "--group", "torus:2:3", "--pos", "mu^6*lambda", "--neg", "mu^7*lambda", "--radius", "3"});
  CHECK(j["status"] == "Unsat");
  CHECK_FALSE(j["trace"].empty());
}

TEST_CASE("JSON output is deterministic") {
  std::vector<std::string> args{"--format", "json", "obstruct", "torus", "2", "3", "--radius", "3", "--N", "1..2",
                                "--family-N", "1"};
  auto a = run(args), b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  std::vector<std::string> cone{"--format", "json", "cone", "--free", "--pos", "a", "--neg", "b", "--radius", "2"};
  CHECK(run(cone).out == run(cone).out);
}

TEST_CASE("--out writes the report to a file") {
  std::string path = "test_cli_out.json";
  auto r = run({"--format", "json", "--out", path, "group", "torus", "2", "3"});
  CHECK(r.code == kExitOk);
  std::ifstream in(path);
  REQUIRE(in.good());
  Json j = Json::parse(in);
  CHECK(j["group"]["relator"] == "aaBBB");
  std::remove(path.c_str());
}

TEST_CASE("expression parser") {
  auto kg = torus_group({2, 3});
  const auto& P = kg.peripheral;
  CHECK(parse_expression("mu^6*lambda", &kg) == P.mu.pow(6) * P.lambda);
  CHECK(parse_expression("mu^6 lambda", &kg) == P.mu.pow(6) * P.lambda);
  CHECK(parse_expression("mu^(-1)", &kg) == P.mu.inverse());
  CHECK(parse_expression("mu^-2", &kg) == P.mu.pow(-2));
  CHECK(parse_expression("s", &kg) == P.s);
  CHECK(parse_expression("(ab)^-2", nullptr) == Word::parse("BABA"));
  CHECK(parse_expression("aB", nullptr) == Word::parse("aB"));
  CHECK(parse_expression("a b", nullptr) == Word::parse("ab"));
  CHECK(parse_expression("1", nullptr).empty());
  CHECK(parse_expression("a^3*A", nullptr) == Word::parse("aa"));
  CHECK_THROWS(parse_expression("mu", nullptr));
  CHECK_THROWS(parse_expression("(a", nullptr));
  CHECK_THROWS(parse_expression("a^", nullptr));
  CHECK_THROWS(parse_expression("c", nullptr));
}

TEST_CASE("integer ranges") {
  CHECK(parse_int_range("3") == std::vector<int>{3});
  CHECK(parse_int_range("1..4") == std::vector<int>{1, 2, 3, 4});
  CHECK(parse_int_range("1,3,5") == std::vector<int>{1, 3, 5});
  CHECK(parse_int_range("1..3,7") == std::vector<int>{1, 2, 3, 7});
  CHECK(parse_int_range("-1..1") == std::vector<int>{-1, 0, 1});
  CHECK_THROWS(parse_int_range(""));
  CHECK_THROWS(parse_int_range("4..1"));
  CHECK_THROWS(parse_int_range("x"));
}
