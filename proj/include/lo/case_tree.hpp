#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lo/certificate.hpp"

namespace lo {

// A factor template; non-empty parts make it a sub-certificate built from the parts.
struct HintFactor {
  Word word;
  int repeat = 1;
  std::vector<HintFactor> parts;
};

HintFactor atom(const Word& w, int repeat = 1);
HintFactor composite(const Word& w, std::vector<HintFactor> parts, int repeat = 1);

// Candidate factorization of `goal`. A leaf uses it when goal is the target or a word
// known to be negative at that leaf, and every atom is known positive there.
struct CertificateHint {
  std::string name;
  Word goal;
  std::vector<HintFactor> factors;
  std::vector<Word> chain;
};

// Certificate for hint.goal under hyps, or nullopt if an atom is not known positive there.
std::optional<PositivityCertificate> certificate_from_hint(const CertificateHint& hint,
                                                           const std::vector<Hypothesis>& hyps,
                                                           const Presentation& pres);

struct CaseNode {
  std::vector<Hypothesis> hypotheses;  // all hypotheses in force at this node
  // internal node
  std::optional<Word> branch;
  std::vector<CaseNode> children;  // sign + then sign -
  // leaf
  enum class Outcome { Target, Contradiction, Open } outcome = Outcome::Open;
  std::string hint;                    // name of the factorization used
  Word contradicted;                   // Contradiction: the hypothesized word whose sign fails
  std::optional<PositivityCertificate> certificate;

  bool leaf() const { return !branch.has_value(); }
};

struct CaseTree {
  std::vector<Hypothesis> root;
  Word target;  // shown positive
  std::vector<Word> branch_words;
  CaseNode node;
};

struct CaseSplitOptions {
  int max_depth = 10;
  int blind_factors = 3;  // products of up to this many known-positive atoms
  Budget budget;
};

struct CaseSplitResult {
  bool ok = false;
  CaseTree tree;                                   // complete when ok
  std::vector<std::vector<Hypothesis>> undischarged;  // leaf hypothesis sets left open
};

CaseSplitResult case_split_prove(const Presentation& pres, const std::vector<Hypothesis>& root,
                                 const Word& target, const std::vector<Word>& branch_words,
                                 const std::vector<CertificateHint>& hints = {},
                                 const CaseSplitOptions& opts = {});

// Every internal node splits on both signs and every leaf certificate verifies; the leaf
// sign patterns cover each full pattern over the branch words exactly once.
bool check_case_tree(const CaseTree& tree, const Presentation& pres, const Budget& budget = {},
                     std::string* error = nullptr);

std::size_t leaf_count(const CaseNode& n);

}  // namespace lo
