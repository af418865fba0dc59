#pragma once

#include <string>
#include <vector>

#include "lo/ball.hpp"
#include "lo/cone_search.hpp"
#include "lo/knot_group.hpp"
#include "lo/slope.hpp"

namespace lo {

// sigma(mu^p lambda^q) = +, sigma(mu^(p+N) lambda^q) = - on a ball around the group.
struct ImplicationRow {
  int N = 0;
  Slope positive;
  Slope negative;
  std::vector<Hypothesis> hypotheses;
  SearchResult result;
  int radius = 0;          // radius of the reported search (minimal Unsat radius when Unsat)
  std::size_t ball_size = 0;
  bool exact = false;
  std::vector<int> tried;  // radii searched, ascending
};

struct ImplicationOptions {
  int min_radius = 0;  // 0: only the requested radius; otherwise scan min_radius..radius
  BallBudget ball;
  SearchOptions search;
  unsigned threads = 0;  // 0: LO_OBSTRUCT_THREADS or hardware concurrency
};

// Rows follow N_range order. N may be negative (e.g. -1 for the slope below the base).
std::vector<ImplicationRow> implication_check(const KnotGroup& kg, const Slope& base,
                                              const std::vector<int>& N_range, int radius,
                                              const ImplicationOptions& opts = {});

// Worker cap: LO_OBSTRUCT_THREADS if set and positive, else hardware concurrency (>= 1).
unsigned worker_count(unsigned requested = 0);

}  // namespace lo
