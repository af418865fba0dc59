#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lo/word.hpp"

namespace lo {

// z^t x_1 ... x_n with z = a^p = b^q central, syllables alternating,
// a-exponents in (0,p) and b-exponents in (0,q).
struct TorusNormalForm {
  std::int64_t t = 0;
  std::vector<Syllable> syllables;

  bool operator==(const TorusNormalForm&) const = default;
  bool is_identity() const { return t == 0 && syllables.empty(); }
  std::string str() const;
  // Shortest-ish word for the element: z^t written as a^{pt}, followed by the syllables.
  Word to_word(int p, int q) const;
};

TorusNormalForm torus_normal_form(const Word& w, int p, int q);

struct TorusNormalFormHash {
  std::size_t operator()(const TorusNormalForm& n) const;
};

}  // namespace lo
