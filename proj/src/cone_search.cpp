#include "lo/cone_search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace lo {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Unsat: return "Unsat";
    case SearchStatus::Sat: return "Sat";
    case SearchStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

constexpr int kDecision = -1;
constexpr int kHypothesis = -2;

struct BudgetExhausted {};

struct Refutation {
  std::vector<TraceStep> steps;
  std::set<int> needed;  // variables from lower levels
  bool used_decision = false;
};

class Solver {
 public:
  Solver(const Ball& ball, const std::vector<Hypothesis>& hyps, const SearchOptions& opts)
      : ball_(ball), hyps_(hyps), opts_(opts) {
    const int n = static_cast<int>(ball.size());
    var_of_.assign(static_cast<std::size_t>(n), -1);
    for (int e = 1; e < n; ++e) {
      int inv = ball.inverse[static_cast<std::size_t>(e)];
      if (e <= inv) {
        var_of_[static_cast<std::size_t>(e)] = static_cast<int>(elem_of_.size());
        elem_of_.push_back(e);
      }
    }
    for (int e = 1; e < n; ++e)
      if (var_of_[static_cast<std::size_t>(e)] < 0)
        var_of_[static_cast<std::size_t>(e)] = var_of_[static_cast<std::size_t>(ball.inverse[static_cast<std::size_t>(e)])];
    const std::size_t nv = elem_of_.size();
    val_.assign(nv, -1);
    level_.assign(nv, -1);
    reason_.assign(nv, kDecision);
    pos_.assign(nv, 0);
    watches_.assign(2 * nv, {});
    build_clauses();
  }

  std::size_t variables() const { return elem_of_.size(); }
  std::size_t clauses() const { return clauses_.size(); }
  std::size_t decisions() const { return decisions_; }

  SearchResult run() {
    SearchResult res;
    for (std::size_t e = 1; e < ball_.size(); ++e) {
      if (ball_.inverse[e] == static_cast<int>(e)) return self_inverse(static_cast<int>(e));
    }
    // Level 0: hypotheses, then unit clauses, then propagation.
    for (std::size_t h = 0; h < hyps_.size(); ++h) {
      int e = *ball_.find(hyps_[h].word);
      int fact = hyps_[h].sign > 0 ? e : inv(e);
      int lit = lit_of(fact);
      int v = lit >> 1;
      if (val_[static_cast<std::size_t>(v)] >= 0) {
        if (lit_true(lit)) continue;
        std::vector<TraceStep> steps;
        steps.push_back(hyp_step(hyp_of_[v], elem_fact(v)));
        steps.push_back(hyp_step(static_cast<int>(h), fact));
        steps.push_back({"contradiction", {fact}, {word_str(fact)}, {}});
        res.status = SearchStatus::Unsat;
        res.trace = std::move(steps);
        return res;
      }
      assign(lit, kHypothesis);
      hyp_of_[v] = static_cast<int>(h);
    }
    for (int c : units_) {
      int lit = clauses_[static_cast<std::size_t>(c)].lits[0];
      if (lit_true(lit)) continue;
      if (lit_false(lit)) {
        auto r = close(0, clause_vars(c), conflict_steps(c));
        res.status = SearchStatus::Unsat;
        res.trace = std::move(r.steps);
        return res;
      }
      assign(lit, c);
    }
    int conf = propagate();
    try {
      Refutation r;
      if (conf >= 0) {
        r = close(0, clause_vars(conf), conflict_steps(conf));
      } else {
        auto sub = solve(0);
        if (!sub) {
          res.status = SearchStatus::Sat;
          res.signs = sat_signs_;
          return res;
        }
        r = std::move(*sub);
      }
      res.status = SearchStatus::Unsat;
      res.trace = std::move(r.steps);
    } catch (const BudgetExhausted&) {
      res.status = SearchStatus::Inconclusive;
      res.reason = "decision budget exhausted after " + std::to_string(decisions_) + " decisions";
    }
    return res;
  }

 private:
  struct Clause {
    std::array<int, 3> lits;
    int size;
    std::array<int, 3> triple;  // (u, v, uv)
  };

  const Ball& ball_;
  const std::vector<Hypothesis>& hyps_;
  SearchOptions opts_;
  std::vector<int> var_of_, elem_of_;
  std::vector<int> val_, level_, reason_, pos_;
  std::vector<Clause> clauses_;
  std::vector<int> units_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> trail_;
  std::vector<std::size_t> trail_lim_;
  std::vector<int> decision_var_;
  std::size_t qhead_ = 0;
  std::size_t decisions_ = 0;
  std::vector<int> sat_signs_;
  std::unordered_map<int, int> hyp_of_;

  int inv(int e) const { return ball_.inverse[static_cast<std::size_t>(e)]; }
  std::string word_str(int e) const {
    const Word& w = ball_.elements[static_cast<std::size_t>(e)];
    return w.empty() ? "1" : w.str();
  }
  // Literal "e is positive".
  int lit_of(int e) const {
    int v = var_of_[static_cast<std::size_t>(e)];
    return 2 * v + (elem_of_[static_cast<std::size_t>(v)] == e ? 0 : 1);
  }
  bool lit_true(int lit) const {
    int x = val_[static_cast<std::size_t>(lit >> 1)];
    return x >= 0 && x == 1 - (lit & 1);
  }
  bool lit_false(int lit) const {
    int x = val_[static_cast<std::size_t>(lit >> 1)];
    return x >= 0 && x == (lit & 1);
  }
  // The element that var v currently makes positive.
  int elem_fact(int v) const {
    int e = elem_of_[static_cast<std::size_t>(v)];
    return val_[static_cast<std::size_t>(v)] == 1 ? e : inv(e);
  }
  bool is_fact(int e) const { return lit_true(lit_of(e)); }

  void build_clauses() {
    std::set<std::array<int, 3>> seen;
    for (const auto& t : ball_.products) {
      std::array<int, 3> lits{lit_of(t[0]) ^ 1, lit_of(t[1]) ^ 1, lit_of(t[2])};
      std::sort(lits.begin(), lits.end());
      int size = static_cast<int>(std::unique(lits.begin(), lits.end()) - lits.begin());
      bool taut = false;
      for (int i = 0; i + 1 < size; ++i)
        if ((lits[static_cast<std::size_t>(i)] ^ 1) == lits[static_cast<std::size_t>(i + 1)]) taut = true;
      if (taut) continue;
      for (int i = size; i < 3; ++i) lits[static_cast<std::size_t>(i)] = -1;
      if (!seen.insert(lits).second) continue;
      int id = static_cast<int>(clauses_.size());
      clauses_.push_back({lits, size, t});
      if (size == 1) {
        units_.push_back(id);
      } else {
        watches_[static_cast<std::size_t>(lits[0])].push_back(id);
        watches_[static_cast<std::size_t>(lits[1])].push_back(id);
      }
    }
  }

  void assign(int lit, int reason) {
    int v = lit >> 1;
    val_[static_cast<std::size_t>(v)] = 1 - (lit & 1);
    level_[static_cast<std::size_t>(v)] = static_cast<int>(trail_lim_.size());
    reason_[static_cast<std::size_t>(v)] = reason;
    pos_[static_cast<std::size_t>(v)] = static_cast<int>(trail_.size());
    trail_.push_back(lit);
  }

  // Returns a conflicting clause or -1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      int false_lit = trail_[qhead_++] ^ 1;
      auto& ws = watches_[static_cast<std::size_t>(false_lit)];
      std::size_t i = 0, j = 0;
      int conflict = -1;
      for (; i < ws.size(); ++i) {
        int c = ws[i];
        if (conflict >= 0) {
          ws[j++] = c;
          continue;
        }
        Clause& cl = clauses_[static_cast<std::size_t>(c)];
        if (cl.lits[0] == false_lit) std::swap(cl.lits[0], cl.lits[1]);
        // cl.lits[1] == false_lit
        if (lit_true(cl.lits[0])) {
          ws[j++] = c;
          continue;
        }
        bool moved = false;
        if (cl.size == 3 && !lit_false(cl.lits[2])) {
          std::swap(cl.lits[1], cl.lits[2]);
          watches_[static_cast<std::size_t>(cl.lits[1])].push_back(c);
          moved = true;
        }
        if (moved) continue;
        ws[j++] = c;
        if (lit_false(cl.lits[0])) {
          conflict = c;
        } else {
          assign(cl.lits[0], c);
        }
      }
      ws.resize(j);
      if (conflict >= 0) return conflict;
    }
    return -1;
  }

  void backtrack(std::size_t lvl) {
    std::size_t keep = trail_lim_[lvl];
    for (std::size_t k = trail_.size(); k > keep; --k) {
      int v = trail_[k - 1] >> 1;
      val_[static_cast<std::size_t>(v)] = -1;
      level_[static_cast<std::size_t>(v)] = -1;
    }
    trail_.resize(keep);
    trail_lim_.resize(lvl);
    decision_var_.resize(lvl);
    qhead_ = keep;
  }

  std::vector<int> clause_vars(int c) const {
    std::vector<int> out;
    const Clause& cl = clauses_[static_cast<std::size_t>(c)];
    for (int i = 0; i < cl.size; ++i) out.push_back(cl.lits[static_cast<std::size_t>(i)] >> 1);
    return out;
  }

  TraceStep hyp_step(int h, int fact) const {
    const auto& hy = hyps_[static_cast<std::size_t>(h)];
    return {"hypothesis", {fact}, {hy.word.empty() ? "1" : hy.word.str(), hy.sign > 0 ? "+" : "-"}, {}};
  }

  TraceStep product_step(int x, int y, int z) const {
    return {"product", {x, y, z}, {word_str(x), word_str(y), word_str(z)}, {}};
  }

  // All literals of c are false: u, v positive and uv = w negative.
  std::vector<TraceStep> conflict_steps(int c) const {
    const auto& t = clauses_[static_cast<std::size_t>(c)].triple;
    std::vector<TraceStep> out;
    out.push_back(product_step(t[0], t[1], t[2]));
    out.push_back({"contradiction", {t[2]}, {word_str(t[2])}, {}});
    return out;
  }

  // Step deriving the current fact of implied variable v from its reason clause.
  TraceStep implied_step(int v) const {
    int fact = elem_fact(v);
    const auto& t = clauses_[static_cast<std::size_t>(reason_[static_cast<std::size_t>(v)])].triple;
    const int u = t[0], x = t[1], w = t[2];
    if (fact == w && is_fact(u) && is_fact(x)) return product_step(u, x, w);
    if (fact == inv(u) && is_fact(x) && is_fact(inv(w))) return product_step(x, inv(w), inv(u));
    if (fact == inv(x) && is_fact(inv(w)) && is_fact(u)) return product_step(inv(w), u, inv(x));
    // Contrapositive through a repeated operand: assuming the opposite sign closes at once.
    int assumed = inv(fact);
    TraceStep s{"inverse", {assumed}, {word_str(assumed)}, {}};
    TraceBranch b;
    b.sign = 1;
    b.steps.push_back(product_step(u, x, w));
    b.steps.push_back({"contradiction", {w}, {word_str(w)}, {}});
    s.cases.push_back(std::move(b));
    return s;
  }

  Refutation close(int lvl, const std::vector<int>& seeds, std::vector<TraceStep> tail) {
    std::set<int> in(seeds.begin(), seeds.end());
    std::vector<int> stack(seeds.begin(), seeds.end());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (level_[static_cast<std::size_t>(v)] != lvl) continue;
      int r = reason_[static_cast<std::size_t>(v)];
      if (r < 0) continue;
      for (int u : clause_vars(r))
        if (in.insert(u).second) stack.push_back(u);
    }
    Refutation out;
    std::vector<int> here;
    for (int v : in) {
      if (level_[static_cast<std::size_t>(v)] == lvl) {
        here.push_back(v);
      } else {
        out.needed.insert(v);
      }
    }
    std::sort(here.begin(), here.end(), [&](int x, int y) {
      return pos_[static_cast<std::size_t>(x)] < pos_[static_cast<std::size_t>(y)];
    });
    for (int v : here) {
      int r = reason_[static_cast<std::size_t>(v)];
      if (r == kDecision) {
        out.used_decision = true;
      } else if (r == kHypothesis) {
        out.steps.push_back(hyp_step(hyp_of_.at(v), elem_fact(v)));
      } else {
        out.steps.push_back(implied_step(v));
      }
    }
    for (auto& s : tail) out.steps.push_back(std::move(s));
    return out;
  }

  int pick_var() const {
    for (std::size_t v = 0; v < val_.size(); ++v)
      if (val_[v] < 0) return static_cast<int>(v);
    return -1;
  }

  // Context at level lvl is propagated without conflict. nullopt means Sat.
  std::optional<Refutation> solve(int lvl) {
    int x = pick_var();
    if (x < 0) {
      sat_signs_.assign(ball_.size(), 0);
      for (std::size_t v = 0; v < val_.size(); ++v) {
        int e = elem_of_[v];
        int s = val_[v] == 1 ? 1 : -1;
        sat_signs_[static_cast<std::size_t>(e)] = s;
        sat_signs_[static_cast<std::size_t>(inv(e))] = -s;
      }
      return std::nullopt;
    }
    if (++decisions_ > opts_.max_decisions) throw BudgetExhausted{};
    Refutation refs[2];
    for (int pol = 0; pol < 2; ++pol) {
      trail_lim_.push_back(trail_.size());
      decision_var_.push_back(x);
      assign(2 * x + pol, kDecision);
      int conf = propagate();
      Refutation r;
      if (conf >= 0) {
        r = close(lvl + 1, clause_vars(conf), conflict_steps(conf));
      } else {
        auto sub = solve(lvl + 1);
        if (!sub) return std::nullopt;
        r = std::move(*sub);
      }
      backtrack(static_cast<std::size_t>(lvl));
      if (!r.used_decision) {
        // The refutation never used x: it is valid here without branching.
        return close(lvl, std::vector<int>(r.needed.begin(), r.needed.end()), std::move(r.steps));
      }
      refs[pol] = std::move(r);
    }
    TraceStep br{"branch", {elem_of_[static_cast<std::size_t>(x)]}, {word_str(elem_of_[static_cast<std::size_t>(x)])}, {}};
    br.cases.push_back({1, std::move(refs[0].steps)});
    br.cases.push_back({-1, std::move(refs[1].steps)});
    std::set<int> need = refs[0].needed;
    need.insert(refs[1].needed.begin(), refs[1].needed.end());
    std::vector<TraceStep> tail;
    tail.push_back(std::move(br));
    return close(lvl, std::vector<int>(need.begin(), need.end()), std::move(tail));
  }

  SearchResult self_inverse(int e) const {
    SearchResult res;
    res.status = SearchStatus::Unsat;
    TraceStep br{"branch", {e}, {word_str(e)}, {}};
    for (int s : {1, -1}) {
      TraceBranch b;
      b.sign = s;
      b.steps.push_back({"contradiction", {e}, {word_str(e)}, {}});
      br.cases.push_back(std::move(b));
    }
    res.trace.push_back(std::move(br));
    return res;
  }
};

}  // namespace

SearchResult cone_consistency(const Ball& ball, const std::vector<Hypothesis>& hyps, const SearchOptions& opts) {
  std::vector<int> elems;
  for (const auto& h : hyps) {
    if (h.sign != 1 && h.sign != -1) throw std::invalid_argument("hypothesis sign must be +1 or -1");
    auto e = ball.find(h.word);
    if (!e) throw std::invalid_argument("hypothesis word " + h.word.str() + " is not in the ball");
    elems.push_back(*e);
  }
  SearchResult res;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (elems[i] != 0) continue;
    res.degenerate = true;
    res.trace.push_back({"hypothesis", {0}, {hyps[i].word.empty() ? "1" : hyps[i].word.str(), hyps[i].sign > 0 ? "+" : "-"}, {}});
    res.trace.push_back({"contradiction", {0}, {"1", "degenerate"}, {}});
    if (ball.exact) {
      res.status = SearchStatus::Unsat;
    } else {
      res.status = SearchStatus::Inconclusive;
      res.reason = "degenerate hypothesis on an inexact ball";
    }
    return res;
  }
  Solver solver(ball, hyps, opts);
  res = solver.run();
  res.decisions = solver.decisions();
  res.variables = solver.variables();
  res.clauses = solver.clauses();
  if (!ball.exact && res.status != SearchStatus::Inconclusive) {
    res.reason = res.status == SearchStatus::Unsat
                     ? "refutation found on an inexact ball; not reported as Unsat"
                     : "consistent assignment found on an inexact ball; not reported as Sat";
    res.status = SearchStatus::Inconclusive;
    res.trace.clear();
  }
  return res;
}

namespace {

struct Replayer {
  const Ball& ball;
  const std::vector<Hypothesis>& hyps;
  std::string err;

  bool fail(const std::string& m) {
    if (err.empty()) err = m;
    return false;
  }

  bool valid(int e) const { return e >= 0 && static_cast<std::size_t>(e) < ball.size(); }

  // Replays steps from the given facts; true iff the sequence closes in a contradiction.
  bool run(const std::vector<TraceStep>& steps, std::unordered_set<int> facts) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& s = steps[i];
      for (int e : s.elems)
        if (!valid(e)) return fail("step " + s.kind + " references an element outside the ball");
      if (s.kind == "hypothesis") {
        if (s.elems.size() != 1 || s.operands.size() != 2) return fail("malformed hypothesis step");
        int sign = s.operands[1] == "+" ? 1 : -1;
        bool found = false;
        for (const auto& h : hyps) {
          if (h.sign != sign) continue;
          auto e = ball.find(h.word);
          if (!e) continue;
          int fact = sign > 0 ? *e : ball.inverse[static_cast<std::size_t>(*e)];
          if (fact == s.elems[0] && (h.word.empty() ? "1" : h.word.str()) == s.operands[0]) found = true;
        }
        if (!found) return fail("hypothesis step does not match any hypothesis");
        facts.insert(s.elems[0]);
      } else if (s.kind == "product") {
        if (s.elems.size() != 3) return fail("malformed product step");
        int x = s.elems[0], y = s.elems[1], z = s.elems[2];
        if (!facts.count(x) || !facts.count(y)) return fail("product operand not established");
        auto p = ball.find(ball.elements[static_cast<std::size_t>(x)] * ball.elements[static_cast<std::size_t>(y)]);
        if (!p || *p != z) return fail("product does not evaluate to the stated element");
        facts.insert(z);
      } else if (s.kind == "inverse") {
        if (s.elems.size() != 1 || s.cases.size() != 1) return fail("malformed inverse step");
        auto sub = facts;
        sub.insert(s.elems[0]);
        if (!run(s.cases[0].steps, sub)) return fail("inverse sub-trace does not close");
        facts.insert(ball.inverse[static_cast<std::size_t>(s.elems[0])]);
      } else if (s.kind == "contradiction") {
        if (s.elems.size() != 1) return fail("malformed contradiction step");
        int z = s.elems[0];
        if (z == 0) return i > 0 && steps[i - 1].kind == "hypothesis" && steps[i - 1].elems[0] == 0
                               ? true
                               : fail("degenerate contradiction without a hypothesis on 1");
        if (!facts.count(z) || !facts.count(ball.inverse[static_cast<std::size_t>(z)]))
          return fail("contradiction operands not established");
        return true;
      } else if (s.kind == "branch") {
        if (s.elems.size() != 1 || s.cases.size() != 2) return fail("malformed branch step");
        int g = s.elems[0];
        bool seen_pos = false, seen_neg = false;
        for (const auto& c : s.cases) {
          auto sub = facts;
          sub.insert(c.sign > 0 ? g : ball.inverse[static_cast<std::size_t>(g)]);
          (c.sign > 0 ? seen_pos : seen_neg) = true;
          if (!run(c.steps, sub)) return fail("branch case does not close");
        }
        if (!seen_pos || !seen_neg) return fail("branch is not exhaustive");
        return true;
      } else {
        return fail("unknown step kind " + s.kind);
      }
    }
    return fail("trace ends without a contradiction");
  }
};

}  // namespace

bool replay_trace(const Ball& ball, const std::vector<Hypothesis>& hyps, const std::vector<TraceStep>& trace,
                  std::string* error) {
  Replayer r{ball, hyps, {}};
  bool ok = r.run(trace, {});
  if (error) *error = r.err;
  return ok;
}

bool check_assignment(const Ball& ball, const std::vector<int>& signs, const std::vector<Hypothesis>& hyps,
                      std::string* error) {
  auto fail = [&](const std::string& m) {
    if (error) *error = m;
    return false;
  };
  if (signs.size() != ball.size()) return fail("assignment size mismatch");
  if (signs[0] != 0) return fail("identity carries a sign");
  for (std::size_t e = 1; e < ball.size(); ++e) {
    if (signs[e] != 1 && signs[e] != -1) return fail("element without a sign");
    if (signs[static_cast<std::size_t>(ball.inverse[e])] != -signs[e]) return fail("inverse axiom violated");
  }
  for (const auto& t : ball.products)
    if (signs[static_cast<std::size_t>(t[0])] > 0 && signs[static_cast<std::size_t>(t[1])] > 0 &&
        signs[static_cast<std::size_t>(t[2])] < 0)
      return fail("product axiom violated");
  for (const auto& h : hyps) {
    auto e = ball.find(h.word);
    if (!e || signs[static_cast<std::size_t>(*e)] != h.sign) return fail("hypothesis violated");
  }
  return true;
}

std::size_t trace_size(const std::vector<TraceStep>& trace) {
  std::size_t n = 0;
  for (const auto& s : trace) {
    ++n;
    for (const auto& c : s.cases) n += trace_size(c.steps);
  }
  return n;
}

}  // namespace lo
