#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lo {

// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  Rational(std::int64_t n = 0, std::int64_t d = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::string rational_str(const Rational& r);

using Vec2 = std::array<std::int64_t, 2>;

// Primitive class p mu + q lambda up to sign, normalized to q >= 0 (1/0 for q = 0).
struct Slope {
  std::int64_t p = 1;
  std::int64_t q = 0;

  static Slope make(std::int64_t p, std::int64_t q);  // throws unless primitive
  static Slope integer(std::int64_t n) { return make(n, 1); }

  bool infinite() const { return q == 0; }
  Rational value() const;  // requires q > 0
  Vec2 vec() const { return {p, q}; }
  std::string str() const;
  bool operator==(const Slope&) const = default;
};

bool slope_less(const Slope& x, const Slope& y);  // as extended rationals, 1/0 largest

// v0 = c (p,q) + d (u,v).
std::pair<Rational, Rational> decompose(Vec2 v0, Vec2 pq, Vec2 uv);

// True iff d0 d1 < 0 for the decompositions of s0 and s1 in the basis {s, uv}.
bool lemma_opp_check(const Slope& s0, const Slope& s1, const Slope& s, Vec2 uv);

// Left-ordering of Z^2: sign of alpha x + beta y, then tie_break along the kernel direction.
struct Z2Ordering {
  std::int64_t alpha = 0;
  std::int64_t beta = 1;
  int tie_break = 1;

  Vec2 kernel_direction() const;  // primitive, first nonzero coordinate positive
  bool operator==(const Z2Ordering&) const = default;
};

int z2_sign(const Z2Ordering& ord, Vec2 v);

// The four orderings in which <(p,q)> is convex.
std::vector<Z2Ordering> convex_orderings(const Slope& pq);

bool prop_opp_check(const Slope& pq, const Slope& s0, const Slope& s1);

}  // namespace lo
