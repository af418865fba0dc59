#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lo/presentation.hpp"
#include "lo/word.hpp"

namespace lo {

// Permutation of {0..n-1}; points act on the right: x^(gh) = (x^g)^h.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {}
  static Perm identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  std::uint8_t operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }
  Perm operator*(const Perm& o) const;  // apply this, then o
  Perm inverse() const;
  Perm pow(std::int64_t e) const;
  bool is_identity() const;
  const std::vector<std::uint8_t>& images() const { return img_; }
  std::string cycles() const;  // 1-based cycle notation

  bool operator==(const Perm&) const = default;

 private:
  std::vector<std::uint8_t> img_;
};

struct FiniteQuotientWitness {
  int degree = 0;
  Perm a;
  Perm b;

  Perm image(const Word& w) const;
  bool satisfies(const Presentation& pres) const;
  bool separates(const Word& u, const Word& v) const { return !(image(u) == image(v)); }
};

// All permutations of n points in lexicographic order.
std::vector<Perm> all_perms(int n);
// One representative per cycle type.
std::vector<Perm> cycle_type_reps(int n);

// Homomorphisms to S_n for 2 <= n <= max_degree with a taken up to conjugacy.
std::vector<FiniteQuotientWitness> enumerate_quotients(const Presentation& pres, int max_degree);

std::optional<FiniteQuotientWitness> find_separating_quotient(const Word& u, const Word& v,
                                                              const Presentation& pres,
                                                              int max_degree);

}  // namespace lo
