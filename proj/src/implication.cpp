#include "lo/implication.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace lo {

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LO_OBSTRUCT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

ImplicationRow run_row(const KnotGroup& kg, const Slope& base, int N, int radius, const ImplicationOptions& opts) {
  ImplicationRow row;
  row.N = N;
  row.positive = base;
  row.negative = Slope::make(base.p + static_cast<std::int64_t>(N) * base.q, base.q);
  Word h0 = peripheral_word(kg, row.positive);
  Word h1 = peripheral_word(kg, row.negative);
  row.hypotheses = {{h0, 1}, {h1, -1}};
  int lo = opts.min_radius > 0 ? std::min(opts.min_radius, radius) : radius;
  for (int r = lo; r <= radius; ++r) {
    Ball ball = build_ball(kg.presentation, r, opts.ball, {h0, h1});
    row.result = cone_consistency(ball, row.hypotheses, opts.search);
    row.radius = r;
    row.ball_size = ball.size();
    row.exact = ball.exact;
    row.tried.push_back(r);
    if (row.result.status == SearchStatus::Unsat) break;
  }
  return row;
}

}  // namespace

std::vector<ImplicationRow> implication_check(const KnotGroup& kg, const Slope& base, const std::vector<int>& N_range,
                                              int radius, const ImplicationOptions& opts) {
  if (base.q <= 0 || base.p <= 0) throw std::invalid_argument("base slope must have p, q > 0");
  if (radius < 1) throw std::invalid_argument("radius must be at least 1");
  for (int N : N_range)
    if (N == 0) throw std::invalid_argument("N must be nonzero");
  std::vector<ImplicationRow> rows(N_range.size());
  const unsigned workers = std::min<unsigned>(worker_count(opts.threads), static_cast<unsigned>(N_range.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < N_range.size(); ++i) rows[i] = run_row(kg, base, N_range[i], radius, opts);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < N_range.size(); i = next++) rows[i] = run_row(kg, base, N_range[i], radius, opts);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace lo
