#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lo/equality.hpp"
#include "lo/presentation.hpp"
#include "lo/slope.hpp"
#include "lo/word.hpp"

namespace lo {

struct TorusKnotSpec {
  int p = 2;
  int q = 3;
};

struct TwistedSpec {
  int k = 0;  // q = 3k + 2
  int m = 0;  // full twists
};

struct PeripheralSystem {
  Word mu;
  Word lambda;
  Word s;
  std::int64_t framing = 0;  // s = mu^framing lambda
};

enum class Family { Torus, Twisted };

struct KnotGroup {
  Presentation presentation;
  PeripheralSystem peripheral;
  std::string label;
  Family family = Family::Torus;
  int p = 0, q = 0;  // torus parameters (twisted: p = 3, q = 3k + 2)
  int k = 0, m = 0;  // twisted parameters
  int i = 0, j = 0;  // torus meridian exponents, p j + q i = 1

  const Word& relator() const { return presentation.relators.front(); }
  // Image in H_1 = Z: a -> q, b -> p for torus knots; a -> 3k+2, b -> 3 for twisted.
  std::int64_t homology(const Word& w) const;
};

KnotGroup torus_group(const TorusKnotSpec& spec);
KnotGroup twisted_group(const TwistedSpec& spec);

// mu^p lambda^q.
Word peripheral_word(const KnotGroup& kg, const Slope& slope);

struct IdentityCheck {
  std::string name;
  Word lhs;
  Word rhs;
  Verdict verdict = Verdict::Unknown;
  std::string method;
  std::size_t derivation_length = 0;
  bool replayed = false;  // derivation replays under free reduction
  std::size_t nodes = 0;
};

struct InvariantCheck {
  std::string name;
  bool holds = false;
  std::string detail;
  bool informational = false;  // reported, but not a verification failure
};

struct IdentityReport {
  std::string label;
  std::vector<IdentityCheck> identities;
  std::vector<InvariantCheck> invariants;

  bool all_equal() const;
  bool any_distinct() const;
};

IdentityReport verify_presentation_identities(const KnotGroup& kg, const Budget& budget = {});

}  // namespace lo
