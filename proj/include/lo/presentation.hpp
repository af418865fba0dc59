#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lo/word.hpp"

namespace lo {

// Set when the single relator is a^p b^-q (or a rotation/inverse of it).
struct TorusParams {
  int p = 0;
  int q = 0;
};

struct Presentation {
  std::vector<Word> relators;
  std::optional<TorusParams> torus;

  static Presentation free_group() { return {}; }
  static Presentation torus_knot(int p, int q);
  static Presentation one_relator(const Word& r);

  // Cyclically reduced relator set; throws if a relator is not.
  void validate() const;
};

}  // namespace lo
