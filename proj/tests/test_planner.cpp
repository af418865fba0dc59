#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "lo/planner.hpp"

using namespace lo;

namespace {

KnotRequest torus_req(int p, int q) {
  KnotRequest r;
  r.family = Family::Torus;
  r.p = p;
  r.q = q;
  return r;
}

KnotRequest twisted_req(int k, int m) {
  KnotRequest r;
  r.family = Family::Twisted;
  r.k = k;
  r.m = m;
  return r;
}

PlannerConfig quick() {
  PlannerConfig cfg;
  cfg.radius = 4;
  cfg.cone_N = {1, 2};
  cfg.family_N = {1, 2};
  cfg.torus_n = {1, 2};
  return cfg;
}

bool has_provenance(const ObstructionReport& r, const std::string& p) {
  return std::any_of(r.components.begin(), r.components.end(),
                     [&](const ObstructionComponent& c) { return c.provenance == p; });
}

bool mentions(const std::vector<std::string>& lines, const std::string& text) {
  return std::any_of(lines.begin(), lines.end(),
                     [&](const std::string& l) { return l.find(text) != std::string::npos; });
}

}  // namespace

TEST_CASE("trefoil obstruction set") {
  auto plan = plan_obstruction(torus_req(2, 3), quick());
  const auto& r = plan.report;
  REQUIRE(r.merged.size() == 1);
  CHECK(r.merged[0].str() == "(5, inf)");
  CHECK(r.merged[0].provenance == "union");
  CHECK(r.infimum() == Rational(5));
  CHECK(has_provenance(r, "endpoint-pair"));
  CHECK(has_provenance(r, "torsion-endpoint"));
  CHECK(has_provenance(r, "monotone-family"));
  CHECK(plan.torsion);
  CHECK(r.obstructs(Rational(6)));
  CHECK(r.obstructs(Rational(11, 2)));
  CHECK(r.obstructs(Rational(1000)));
  CHECK_FALSE(r.obstructs(Rational(5)));
  CHECK_FALSE(r.obstructs(Rational(4)));
  CHECK(mentions(r.caveats, "pq-1"));
  REQUIRE(plan.suite);
  CHECK(plan.suite->all_ok());
  for (const auto& row : plan.table) CHECK(row.result.status == SearchStatus::Unsat);
  REQUIRE(plan.endpoint.size() == 1);
  CHECK(plan.endpoint[0].result.status == SearchStatus::Unsat);
}

TEST_CASE("without the family the upper end stays finite") {
  auto cfg = quick();
  cfg.family_N = {};
  auto plan = plan_obstruction(torus_req(2, 3), cfg);
  const auto& r = plan.report;
  REQUIRE(r.merged.size() == 1);
  REQUIRE(r.merged[0].hi.has_value());
  CHECK(r.merged[0].lo == Rational(5));
  CHECK(*r.merged[0].hi == Rational(6 + 2));
  CHECK_FALSE(r.obstructs(Rational(8)));
  CHECK(r.obstructs(Rational(7)));
}

TEST_CASE("every component lies inside the merged set") {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
    auto plan = plan_obstruction(torus_req(p, q), quick());
    const auto& r = plan.report;
    CAPTURE(p);
    CAPTURE(q);
    REQUIRE_FALSE(r.merged.empty());
    CHECK(r.infimum() == Rational(p * q - 1));
    for (const auto& c : r.components) {
      Rational probe = c.hi ? (c.lo + *c.hi) / Rational(2) : c.lo + Rational(1);
      if (c.kind == ComponentKind::Point) probe = c.lo;
      CHECK(c.contains(probe));
      CHECK(r.obstructs(probe));
    }
  }
}

TEST_CASE("twisted1 family intervals start at 9k + 8") {
  for (int k = 0; k <= 2; ++k) {
    auto plan = plan_obstruction(twisted_req(k, 1), quick());
    const auto& r = plan.report;
    CAPTURE(k);
    REQUIRE(plan.proof_family);
    // k = 1, m = 1 is also pretzel m = 1, which the planner prefers; both give 17
    CHECK(*plan.proof_family == (k == 1 ? ProofFamily::Pretzel : ProofFamily::Twisted1));
    REQUIRE(r.infimum());
    CHECK(*r.infimum() == Rational(9 * k + 8));
    CHECK(r.merged.back().hi == std::nullopt);
    CHECK(has_provenance(r, "monotone-family"));
  }
}

TEST_CASE("pretzel family intervals start at 15 + 2m") {
  for (int m = 0; m <= 2; ++m) {
    auto plan = plan_obstruction(twisted_req(1, m), quick());
    const auto& r = plan.report;
    CAPTURE(m);
    REQUIRE(plan.proof_family);
    CHECK(*plan.proof_family == ProofFamily::Pretzel);
    REQUIRE(r.infimum());
    CHECK(*r.infimum() == Rational(15 + 2 * m));
  }
}

TEST_CASE("untwisted request with k != 1 uses the torus argument") {
  auto plan = plan_obstruction(twisted_req(2, 0), quick());
  REQUIRE(plan.proof_family);
  CHECK(*plan.proof_family == ProofFamily::Torus);
  REQUIRE(plan.report.infimum());
  CHECK(*plan.report.infimum() == Rational(3 * 8 - 1));
  CHECK_FALSE(plan.report.caveats.empty());
}

TEST_CASE("uncovered twisted parameters report only the cone table") {
  auto plan = plan_obstruction(twisted_req(2, 2), quick());
  CHECK_FALSE(plan.proof_family);
  CHECK_FALSE(plan.report.caveats.empty());
  CHECK_FALSE(has_provenance(plan.report, "monotone-family"));
}

TEST_CASE("invalid requests are rejected") {
  CHECK_THROWS_AS(plan_obstruction(torus_req(2, 4)), std::invalid_argument);
  CHECK_THROWS_AS(plan_obstruction(twisted_req(-1, 1)), std::invalid_argument);
}
