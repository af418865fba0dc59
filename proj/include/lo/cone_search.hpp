#pragma once

#include <string>
#include <vector>

#include "lo/ball.hpp"
#include "lo/word.hpp"

namespace lo {

struct Hypothesis {
  Word word;
  int sign = 1;  // +1: word > 1, -1: word < 1
};

struct TraceBranch;

// One propagation step. Facts are "element is positive".
//   hypothesis     elems {e}: the hypothesis on operands[0] makes e positive (e = h or h^-1)
//   product        elems {x, y, z}: x, y positive and xy = z in the ball, so z positive
//   inverse        elems {x}: the sub-trace refutes "x positive", so x^-1 is positive
//   contradiction  elems {z}: z and z^-1 both positive (or a degenerate hypothesis on 1)
//   branch         elems {g}: cases g positive / g^-1 positive, each refuted by its sub-trace
struct TraceStep {
  std::string kind;
  std::vector<int> elems;
  std::vector<std::string> operands;
  std::vector<TraceBranch> cases;
};

struct TraceBranch {
  int sign = 1;
  std::vector<TraceStep> steps;
};

enum class SearchStatus { Unsat, Sat, Inconclusive };
const char* to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::vector<TraceStep> trace;  // Unsat
  std::vector<int> signs;        // Sat: +1/-1 per ball element, 0 for the identity
  std::string reason;            // Inconclusive
  bool degenerate = false;       // a hypothesis word is the identity
  std::size_t decisions = 0;
  std::size_t variables = 0;
  std::size_t clauses = 0;
};

struct SearchOptions {
  std::size_t max_decisions = 2000000;
};

// Refutes sign hypotheses on a ball. Unsat is reported only for exact balls: on an
// inexact ball two listed elements may secretly coincide (or one may be trivial), so a
// contradiction found there could be an artifact. Missing merges only drop constraints,
// so Sat answers would be safe, but an inexact ball answers Inconclusive throughout.
SearchResult cone_consistency(const Ball& ball, const std::vector<Hypothesis>& hyps,
                              const SearchOptions& opts = {});

// Independent replay of an Unsat trace against the ball's multiplication.
bool replay_trace(const Ball& ball, const std::vector<Hypothesis>& hyps,
                  const std::vector<TraceStep>& trace, std::string* error = nullptr);

// Checks the inverse and product axioms and the hypotheses by direct iteration.
bool check_assignment(const Ball& ball, const std::vector<int>& signs,
                      const std::vector<Hypothesis>& hyps, std::string* error = nullptr);

std::size_t trace_size(const std::vector<TraceStep>& trace);

}  // namespace lo
