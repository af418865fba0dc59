#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>
#include <set>

#include "lo/ball.hpp"
#include "lo/cone_search.hpp"
#include "lo/implication.hpp"
#include "lo/knot_group.hpp"
#include "oracles.hpp"

using namespace lo;

namespace {

Word W(const char* s) { return Word::parse(s); }

std::vector<std::pair<int, int>> oracle_hyps(const oracle::TorusBall& ob, const std::vector<Hypothesis>& hyps) {
  std::vector<std::pair<int, int>> out;
  for (const auto& h : hyps) out.push_back({ob.find(h.word.str()), h.sign});
  return out;
}

std::vector<Word> hyp_words(const std::vector<Hypothesis>& hyps) {
  std::vector<Word> out;
  for (const auto& h : hyps) out.push_back(h.word);
  return out;
}

BallBudget starved() {
  BallBudget b;
  b.equality.max_insertions = 0;
  b.equality.quotient_degree = 1;
  b.equality.max_nodes = 1;
  return b;
}

}  // namespace

TEST_CASE("free ball of radius 2") {
  Ball b = build_ball(Presentation::free_group(), 2);
  CHECK(b.exact);
  CHECK(b.size() == 17);
  CHECK(b.elements[0].empty());
  for (std::size_t e = 1; e < b.size(); ++e) {
    CHECK(b.inverse[e] != static_cast<int>(e));
    CHECK(b.inverse[static_cast<std::size_t>(b.inverse[e])] == static_cast<int>(e));
  }
  CHECK(b.find(W("ab")).has_value());
  CHECK_FALSE(b.find(W("aba")).has_value());
}

TEST_CASE("torus balls match the string oracle") {
  for (auto [p, q] : {std::pair{2, 3}, {3, 4}, {2, 5}}) {
    for (int r : {2, 3, 4}) {
      Ball b = build_ball(Presentation::torus_knot(p, q), r);
      oracle::TorusBall ob(p, q, r, {});
      CAPTURE(p);
      CAPTURE(q);
      CAPTURE(r);
      CHECK(b.exact);
      REQUIRE(b.size() == ob.elements.size());
      // map library indices to oracle indices and compare the product tables
      std::vector<int> to(b.size());
      for (std::size_t e = 0; e < b.size(); ++e) to[e] = ob.find(b.elements[e].str());
      std::set<std::array<int, 3>> lib, ora(ob.products.begin(), ob.products.end());
      for (const auto& t : b.products) lib.insert({to[static_cast<std::size_t>(t[0])], to[static_cast<std::size_t>(t[1])],
                                                   to[static_cast<std::size_t>(t[2])]});
      CHECK(lib == ora);
      for (std::size_t e = 0; e < b.size(); ++e)
        CHECK(to[static_cast<std::size_t>(b.inverse[e])] == ob.inverse[static_cast<std::size_t>(to[e])]);
    }
  }
}

TEST_CASE("hypothesis outside the ball is rejected") {
  Ball b = build_ball(Presentation::free_group(), 1);
  CHECK_THROWS_AS(cone_consistency(b, {{W("ab"), 1}}), std::invalid_argument);
}

TEST_CASE("a and a^-1 both positive is refuted") {
  Ball b = build_ball(Presentation::free_group(), 1);
  auto r = cone_consistency(b, {{W("a"), 1}, {W("A"), 1}});
  REQUIRE(r.status == SearchStatus::Unsat);
  CHECK(replay_trace(b, {{W("a"), 1}, {W("A"), 1}}, r.trace));
}

TEST_CASE("free group hypotheses are satisfiable") {
  std::vector<Hypothesis> hyps{{W("a"), 1}, {W("b"), -1}};
  Ball b = build_ball(Presentation::free_group(), 3, {}, hyp_words(hyps));
  auto r = cone_consistency(b, hyps);
  REQUIRE(r.status == SearchStatus::Sat);
  std::string err;
  CHECK_MESSAGE(check_assignment(b, r.signs, hyps, &err), err);
}

TEST_CASE("degenerate hypothesis on the identity") {
  Ball b = build_ball(Presentation::torus_knot(2, 3), 2, {}, {W("aaBBB")});
  auto r = cone_consistency(b, {{W("aaBBB"), 1}});
  CHECK(r.status == SearchStatus::Unsat);
  CHECK(r.degenerate);
  CHECK(replay_trace(b, {{W("aaBBB"), 1}}, r.trace));
}

TEST_CASE("trefoil: mu^6 lambda > 1 and mu^7 lambda < 1 is refuted with a replayable trace") {
  auto kg = torus_group({2, 3});
  std::vector<Hypothesis> hyps{{peripheral_word(kg, Slope::integer(6)), 1},
                               {peripheral_word(kg, Slope::integer(7)), -1}};
  Ball b = build_ball(kg.presentation, 2, {}, hyp_words(hyps));
  auto r = cone_consistency(b, hyps);
  REQUIRE(r.status == SearchStatus::Unsat);
  std::string err;
  CHECK_MESSAGE(replay_trace(b, hyps, r.trace, &err), err);
  CHECK(trace_size(r.trace) > 0);

  SUBCASE("tampered traces fail replay") {
    auto t = r.trace;
    t.pop_back();
    CHECK_FALSE(replay_trace(b, hyps, t));
    t = r.trace;
    bool changed = false;
    for (auto& s : t)
      if (s.kind == "product") {
        std::swap(s.elems[0], s.elems[2]);
        changed = true;
        break;
      }
    if (changed) CHECK_FALSE(replay_trace(b, hyps, t));
  }
}

TEST_CASE("engine agrees with exhaustive backtracking on random hypothesis sets") {
  std::mt19937 rng(7);
  int seen_unsat = 0, seen_sat = 0;
  for (auto [p, q, r] : {std::tuple{2, 3, 3}, {2, 3, 4}, {3, 4, 2}, {2, 5, 3}}) {
    Ball b = build_ball(Presentation::torus_knot(p, q), r);
    oracle::TorusBall ob(p, q, r, {});
    REQUIRE(b.size() == ob.elements.size());
    std::uniform_int_distribution<std::size_t> pick(1, b.size() - 1);
    std::uniform_int_distribution<int> count(1, 3), sign(0, 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Hypothesis> hyps;
      int n = count(rng);
      for (int i = 0; i < n; ++i) hyps.push_back({b.elements[pick(rng)], sign(rng) ? 1 : -1});
      auto res = cone_consistency(b, hyps);
      auto o = oracle::exhaustive_signs(ob.elements.size(), ob.inverse, ob.products, oracle_hyps(ob, hyps), 50000000);
      REQUIRE(o.outcome != oracle::Outcome::Timeout);
      CAPTURE(p);
      CAPTURE(q);
      CAPTURE(trial);
      CHECK((res.status == SearchStatus::Unsat) == (o.outcome == oracle::Outcome::Unsat));
      if (res.status == SearchStatus::Unsat) CHECK(replay_trace(b, hyps, res.trace));
      if (res.status == SearchStatus::Sat) CHECK(check_assignment(b, res.signs, hyps));
      seen_unsat += res.status == SearchStatus::Unsat;
      seen_sat += res.status == SearchStatus::Sat;
    }
  }
  CHECK(seen_unsat > 0);
  CHECK(seen_sat > 0);
}

TEST_CASE("Unsat persists as the radius grows") {
  auto kg = torus_group({2, 3});
  std::vector<Hypothesis> hyps{{peripheral_word(kg, Slope::integer(6)), 1},
                               {peripheral_word(kg, Slope::integer(8)), -1}};
  bool unsat = false;
  for (int r = 1; r <= 5; ++r) {
    Ball b = build_ball(kg.presentation, r, {}, hyp_words(hyps));
    auto res = cone_consistency(b, hyps);
    if (unsat) CHECK(res.status == SearchStatus::Unsat);
    unsat = unsat || res.status == SearchStatus::Unsat;
  }
  CHECK(unsat);
}

TEST_CASE("inexact balls never report Unsat") {
  auto kg = twisted_group({1, 1});
  Ball b = build_ball(kg.presentation, 2, starved());
  REQUIRE_FALSE(b.exact);
  CHECK_FALSE(b.notes.empty());
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(1, b.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Hypothesis> hyps{{b.elements[pick(rng)], sign(rng) ? 1 : -1},
                                 {b.elements[pick(rng)], sign(rng) ? 1 : -1}};
    auto res = cone_consistency(b, hyps);
    CHECK(res.status == SearchStatus::Inconclusive);
    CHECK_FALSE(res.reason.empty());
  }
  CHECK(cone_consistency(b, {{W("a"), 1}, {W("A"), 1}}).status == SearchStatus::Inconclusive);
}

TEST_CASE("twisted ball of radius 2 is exact under the default budget") {
  Ball b = build_ball(twisted_group({1, 1}).presentation, 2);
  CHECK(b.exact);
  CHECK(b.size() > 1);
}

TEST_CASE("implication_check on the trefoil") {
  auto kg = torus_group({2, 3});
  ImplicationOptions opts;
  opts.min_radius = 1;
  auto rows = implication_check(kg, Slope::integer(6), {-1, 1, 2, 3}, 5, opts);
  REQUIRE(rows.size() == 4);
  std::vector<int> expect{2, 2, 3, 4};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].N);
    CHECK(rows[i].result.status == SearchStatus::Unsat);
    CHECK(rows[i].radius == expect[i]);
    CHECK(rows[i].exact);
    CHECK(rows[i].tried.back() == rows[i].radius);
  }
  CHECK(rows[0].negative == Slope::integer(5));
  CHECK(rows[3].negative == Slope::integer(9));
  CHECK_THROWS_AS(implication_check(kg, Slope::integer(6), {0}, 2), std::invalid_argument);
}

TEST_CASE("worker_count honours the environment") {
  setenv("LO_OBSTRUCT_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  CHECK(worker_count(2) == 2);
  setenv("LO_OBSTRUCT_THREADS", "0", 1);
  CHECK(worker_count() >= 1);
  unsetenv("LO_OBSTRUCT_THREADS");
}
