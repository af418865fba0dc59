#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lo/derivation.hpp"
#include "lo/finite_quotient.hpp"
#include "lo/presentation.hpp"
#include "lo/word.hpp"

namespace lo {

struct Budget {
  int max_insertions = 4;
  int length_factor = 4;
  int quotient_degree = 6;
  std::size_t max_nodes = 200000;
};

enum class Verdict { Equal, Distinct, Unknown };

const char* to_string(Verdict v);

struct EqualityVerdict {
  Verdict kind = Verdict::Unknown;
  Derivation derivation;                        // Equal: proves u v^-1 = 1
  bool has_derivation = false;                  // false for normal-form-only equalities
  std::optional<FiniteQuotientWitness> witness;  // Distinct
  std::string method;                           // free, normal-form, relator-search, quotient, ...
  std::size_t nodes = 0;                        // search effort

  bool equal() const { return kind == Verdict::Equal; }
};

// Single insertion test: w is a conjugate of a relator rotation (or its inverse).
std::optional<Derivation> single_relator_step(const Word& w, const Presentation& pres);

// Bounded relator-insertion search for a derivation of w = 1.
std::optional<Derivation> search_derivation(const Word& w, const Presentation& pres,
                                            const Budget& budget, std::size_t* nodes = nullptr);

EqualityVerdict equal_in_group(const Word& u, const Word& v, const Presentation& pres,
                               const Budget& budget = {});

// Proves e_0 = e_1 = ... = e_n link by link and composes into a derivation of e_0 e_n^-1.
// Torus presentations skip derivations and compare normal forms.
struct ChainResult {
  bool ok = false;
  bool replayable = true;
  Derivation derivation;
  std::size_t failed_link = 0;
};
ChainResult prove_chain(const std::vector<Word>& links, const Presentation& pres,
                        const Budget& budget = {});

}  // namespace lo
