#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "lo/obstruction.hpp"
#include "lo/slope.hpp"

using namespace lo;

namespace {

int sgn(std::int64_t x) { return (x > 0) - (x < 0); }

// Sign of d in v0 = c s + d uv, by Cramer's rule written as cross products.
int d_sign(Vec2 v0, Vec2 s, Vec2 uv) {
  std::int64_t num = s[0] * v0[1] - s[1] * v0[0];
  std::int64_t det = s[0] * uv[1] - s[1] * uv[0];
  return sgn(num) * sgn(det);
}

Slope random_positive_slope(std::mt19937& rng, int hi) {
  std::uniform_int_distribution<int> d(1, hi);
  while (true) {
    int p = d(rng), q = d(rng);
    if (std::gcd(p, q) == 1) return Slope::make(p, q);
  }
}

// Orderings of Z^2 given by a functional in a box, filtered by convexity of <v>.
bool convex_on_box(const Z2Ordering& ord, Vec2 v, int box) {
  if (z2_sign(ord, v) == 0) return false;
  Vec2 top = z2_sign(ord, v) > 0 ? v : Vec2{-v[0], -v[1]};
  for (int x = -box; x <= box; ++x) {
    for (int y = -box; y <= box; ++y) {
      Vec2 g{x, y};
      if (z2_sign(ord, g) <= 0) continue;
      Vec2 diff{top[0] - x, top[1] - y};
      if (z2_sign(ord, diff) <= 0) continue;
      // 1 < g < top forces g into <v>
      if (v[0] * y - v[1] * x != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("decompose examples") {
  auto [c1, d1] = decompose({1, 1}, {2, 1}, {1, 0});
  CHECK((c1 == 1));
  CHECK((d1 == -1));
  auto [c2, d2] = decompose({3, 1}, {2, 1}, {1, 0});
  CHECK((c2 == 1));
  CHECK((d2 == 1));
  auto [c3, d3] = decompose({7, 3}, {7, 3}, {2, 1});
  CHECK((c3 == 1));
  CHECK((d3 == 0));
  CHECK_THROWS_AS(decompose({1, 1}, {2, 1}, {4, 2}), std::invalid_argument);
}

TEST_CASE("decompose reconstructs its input") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int i = 0; i < 500; ++i) {
    Vec2 v0{d(rng), d(rng)}, pq{d(rng), d(rng)}, uv{d(rng), d(rng)};
    if (pq[0] * uv[1] - pq[1] * uv[0] == 0) continue;
    auto [c, e] = decompose(v0, pq, uv);
    CHECK((c * pq[0] + e * uv[0] == v0[0]));
    CHECK((c * pq[1] + e * uv[1] == v0[1]));
  }
}

TEST_CASE("lemma_opp_check examples and preconditions") {
  CHECK(lemma_opp_check(Slope::make(1, 1), Slope::make(3, 1), Slope::make(2, 1), {1, 0}));
  CHECK(lemma_opp_check(Slope::make(5, 1), Slope::make(7, 1), Slope::make(6, 1), {1, 0}));
  CHECK(lemma_opp_check(Slope::make(1, 2), Slope::make(1, 1), Slope::make(2, 3), {1, 1}));
  CHECK_THROWS_AS(lemma_opp_check(Slope::make(1, 1), Slope::make(3, 1), Slope::make(5, 1), {1, 0}),
                  std::domain_error);
  CHECK_THROWS_AS(lemma_opp_check(Slope::make(1, 1), Slope::make(3, 1), Slope::make(2, 1), {4, 2}),
                  std::domain_error);
}

TEST_CASE("lemma_opp_check agrees with the cross-product oracle on random instances") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> d(-12, 12);
  int done = 0;
  while (done < 1000) {
    Slope s0 = random_positive_slope(rng, 30), s1 = random_positive_slope(rng, 30);
    Slope s = random_positive_slope(rng, 30);
    Rational lo = std::min(s0.value(), s1.value()), hi = std::max(s0.value(), s1.value());
    if (!(lo < s.value() && s.value() < hi)) continue;
    Vec2 uv{d(rng), d(rng)};
    if (s.p * uv[1] - s.q * uv[0] == 0) continue;
    bool oracle = d_sign(s0.vec(), s.vec(), uv) * d_sign(s1.vec(), s.vec(), uv) < 0;
    CHECK(oracle);
    CHECK(lemma_opp_check(s0, s1, s, uv) == oracle);
    ++done;
  }
}

TEST_CASE("z2_sign examples") {
  CHECK(z2_sign({0, 1, 1}, {5, 0}) == 1);
  CHECK(z2_sign({1, -2, 1}, {1, 1}) == -1);
  CHECK(z2_sign({1, -2, -1}, {1, 1}) == -1);
  CHECK(z2_sign({1, -2, 1}, {2, 1}) == 1);
  CHECK(z2_sign({1, -2, -1}, {2, 1}) == -1);
  CHECK(z2_sign({1, -2, -1}, {0, 0}) == 0);
}

TEST_CASE("z2_sign is a total left order on a box") {
  for (const auto& ord : std::vector<Z2Ordering>{{0, 1, 1}, {1, -2, -1}, {-3, 5, 1}, {7, 2, -1}}) {
    for (int x = -5; x <= 5; ++x) {
      for (int y = -5; y <= 5; ++y) {
        Vec2 u{x, y};
        int su = z2_sign(ord, u);
        CHECK((su == 0) == (x == 0 && y == 0));
        CHECK(z2_sign(ord, {-x, -y}) == -su);
        for (int x2 = -5; x2 <= 5; ++x2) {
          for (int y2 = -5; y2 <= 5; ++y2) {
            Vec2 v{x2, y2};
            // positive cone closed under addition gives transitivity
            if (su > 0 && z2_sign(ord, v) > 0) CHECK(z2_sign(ord, {x + x2, y + y2}) > 0);
          }
        }
      }
    }
  }
}

TEST_CASE("convex_orderings matches a brute-force enumeration") {
  for (auto pq : {Slope::make(1, 0), Slope::make(2, 1), Slope::make(3, 2), Slope::make(1, 3)}) {
    auto ords = convex_orderings(pq);
    REQUIRE(ords.size() == 4);
    std::vector<Z2Ordering> brute;
    for (int a = -6; a <= 6; ++a)
      for (int b = -6; b <= 6; ++b) {
        if ((a == 0 && b == 0) || std::gcd(a, b) != 1) continue;
        for (int t : {1, -1}) {
          Z2Ordering o{a, b, t};
          if (convex_on_box(o, pq.vec(), 6)) brute.push_back(o);
        }
      }
    CHECK(brute.size() == 4);
    for (const auto& o : ords) {
      CHECK(std::find(brute.begin(), brute.end(), o) != brute.end());
      CHECK(z2_sign(o, pq.vec()) == o.tie_break);
    }
  }
}

TEST_CASE("prop_opp_check examples and random instances") {
  CHECK(prop_opp_check(Slope::make(2, 1), Slope::make(1, 1), Slope::make(3, 1)));
  CHECK(prop_opp_check(Slope::make(6, 1), Slope::make(5, 1), Slope::make(7, 1)));
  CHECK(prop_opp_check(Slope::make(17, 1), Slope::make(16, 1), Slope::make(18, 1)));
  CHECK_THROWS_AS(prop_opp_check(Slope::make(17, 1), Slope::make(17, 2), Slope::make(9, 1)), std::domain_error);
  std::mt19937 rng(99);
  int done = 0;
  while (done < 200) {
    Slope s0 = random_positive_slope(rng, 25), s1 = random_positive_slope(rng, 25);
    Slope s = random_positive_slope(rng, 25);
    Rational lo = std::min(s0.value(), s1.value()), hi = std::max(s0.value(), s1.value());
    if (!(lo < s.value() && s.value() < hi)) continue;
    CHECK(prop_opp_check(s, s0, s1));
    ++done;
  }
}

TEST_CASE("slopes") {
  CHECK(Slope::make(-3, -2) == Slope{3, 2});
  CHECK(Slope::make(-1, 0) == Slope{1, 0});
  CHECK_THROWS(Slope::make(4, 2));
  CHECK_THROWS(Slope::make(0, 0));
  CHECK(Slope::make(17, 2).str() == "17/2");
  CHECK(slope_less(Slope::make(5, 1), Slope::make(11, 2)));
  CHECK(slope_less(Slope::make(5, 1), Slope::make(1, 0)));
}

TEST_CASE("interval and monotone obstruction") {
  Evidence ev{"e1", "cone-search", Slope::make(6, 1), Slope::make(7, 1), true, ""};
  auto c = interval_obstruction(Slope::make(6, 1), Slope::make(7, 1), ev);
  CHECK(c.str() == "(6, 7)");
  Evidence rev{"e2", "cone-search", Slope::make(6, 1), Slope::make(5, 1), true, ""};
  CHECK(interval_obstruction(Slope::make(6, 1), Slope::make(5, 1), rev).str() == "(5, 6)");
  CHECK_THROWS(interval_obstruction(Slope::make(6, 1), Slope::make(6, 1), ev));
  Evidence bad = ev;
  bad.certified = false;
  CHECK_THROWS(interval_obstruction(Slope::make(6, 1), Slope::make(7, 1), bad));

  std::vector<Evidence> per;
  for (int n = 1; n <= 3; ++n)
    per.push_back({"n" + std::to_string(n), "cone-search", Slope::make(6, 1), Slope::make(6 + n, 1), true, ""});
  auto partial = monotone_obstruction(Slope::make(6, 1), per, std::nullopt);
  REQUIRE(partial.components.size() == 1);
  CHECK(partial.components[0].str() == "(6, 9)");
  CHECK(partial.gap);
  Evidence fam{"fam", "certificate-family", Slope::make(6, 1), Slope::make(1, 0), true, ""};
  auto full = monotone_obstruction(Slope::make(6, 1), per, fam);
  CHECK(full.components[0].str() == "(6, inf)");
  CHECK_FALSE(full.gap);
}

TEST_CASE("merge_components assembles the torus decomposition") {
  ObstructionComponent a;
  a.lo = 5;
  a.hi = Rational(6);
  a.provenance = "endpoint-pair";
  ObstructionComponent pt;
  pt.kind = ComponentKind::Point;
  pt.lo = 6;
  pt.provenance = "torsion-endpoint";
  ObstructionComponent b;
  b.lo = 6;
  b.provenance = "monotone-family";
  auto m = merge_components({b, a, pt});
  REQUIRE(m.size() == 1);
  CHECK(m[0].str() == "(5, inf)");
  auto gap = merge_components({a, b});
  CHECK(gap.size() == 2);
  auto fin = merge_components({a, pt});
  REQUIRE(fin.size() == 1);
  CHECK(fin[0].str() == "(5, 6]");
}
