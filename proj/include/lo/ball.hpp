#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lo/equality.hpp"
#include "lo/presentation.hpp"
#include "lo/word.hpp"

namespace lo {

// Finite truncation of a group: the elements of word length <= radius (plus any
// requested extra words and their inverses) with the products that stay inside.
struct Ball {
  Presentation presentation;
  int radius = 0;
  bool exact = false;
  std::vector<Word> elements;  // elements[0] is the identity; shortlex-first representatives
  std::vector<int> inverse;
  std::vector<std::array<int, 3>> products;  // (u, v, uv), all non-identity
  std::vector<std::string> notes;            // why exactness was lost, merge statistics

  std::size_t size() const { return elements.size(); }
  // Element index of a word, if the word's group element is in the ball.
  std::optional<int> find(const Word& w) const;
  // Product of two listed elements, if it lies in the ball.
  std::optional<int> multiply(int u, int v) const;

  // Lookup structures (filled by build_ball).
  enum class Mode { Free, Torus, Words } mode = Mode::Free;
  std::unordered_map<std::string, int> key_index;
  std::string key_of(const Word& w) const;
};

struct BallBudget {
  Budget equality;                 // per-pair merge search
  std::size_t max_elements = 20000;
  std::size_t max_merge_pairs = 20000;
};

Ball build_ball(const Presentation& pres, int radius, const BallBudget& budget = {},
                const std::vector<Word>& extra = {});

}  // namespace lo
