#pragma once

#include <string>
#include <vector>

#include "lo/presentation.hpp"
#include "lo/word.hpp"

namespace lo {

// One relator insertion: the current word W becomes reduce(g r_i^sign g^-1 W).
struct DerivationStep {
  Word conjugator;
  int relator = 0;
  int sign = 1;
  bool operator==(const DerivationStep&) const = default;
};

// A derivation for a word w replays it to the empty word.
struct Derivation {
  std::vector<DerivationStep> steps;

  std::size_t size() const { return steps.size(); }
  Word replay(const Presentation& pres, const Word& start) const;
  bool proves_trivial(const Presentation& pres, const Word& w) const {
    return replay(pres, w).empty();
  }
  // Derivation for u v^-1 proves u = v.
  bool proves_equal(const Presentation& pres, const Word& u, const Word& v) const {
    return proves_trivial(pres, u * v.inverse());
  }
};

// d1 proves x = 1 and d2 proves y = 1; the result proves xy = 1.
Derivation compose(const Derivation& d1, const Derivation& d2);
// d proves w = 1; the result proves p w p^-1 = 1.
Derivation lift(const Derivation& d, const Word& p);
// d proves w = 1; the result proves w^-1 = 1.
Derivation reverse(const Derivation& d);

}  // namespace lo
