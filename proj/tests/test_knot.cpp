#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "lo/knot_group.hpp"
#include "lo/obstruction.hpp"
#include "lo/torus_normal_form.hpp"

using namespace lo;

namespace doctest {
template <>
struct StringMaker<Word> {
  static String convert(const Word& w) { return w.str().c_str(); }
};
}  // namespace doctest

namespace {

Word W(const char* s) { return Word::parse(s); }

// Extended Euclid search under the stated inequalities, written independently.
std::pair<int, int> meridian_exponents(int p, int q) {
  for (int j = -q + 1; j < 0; ++j)
    for (int i = 1; i < p; ++i)
      if (p * j + q * i == 1) return {i, j};
  return {0, 0};
}

const InvariantCheck* find_invariant(const IdentityReport& r, const std::string& name) {
  for (const auto& c : r.invariants)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("torus groups") {
  auto t23 = torus_group({2, 3});
  CHECK(t23.i == 1);
  CHECK(t23.j == -1);
  CHECK(t23.peripheral.mu == W("Ba"));
  CHECK(t23.peripheral.lambda == W("Ba").pow(-6) * W("aa"));
  CHECK(t23.relator() == W("aaBBB"));
  auto t35 = torus_group({3, 5});
  CHECK(t35.i == 2);
  CHECK(t35.j == -3);
  CHECK(t35.peripheral.mu == W("BBBaa"));
  CHECK(equal_in_group(W("bbA"), t35.peripheral.mu, t35.presentation).equal());
  for (int p = 2; p <= 7; ++p)
    for (int q = 2; q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto kg = torus_group({p, q});
      auto [i, j] = meridian_exponents(p, q);
      CHECK(kg.i == i);
      CHECK(kg.j == j);
      CHECK(kg.peripheral.framing == p * q);
      CHECK(kg.homology(kg.peripheral.lambda) == 0);
      CHECK(kg.homology(kg.peripheral.mu) == 1);
    }
  CHECK_THROWS(torus_group({2, 4}));
  CHECK_THROWS(torus_group({1, 3}));
}

TEST_CASE("twisted groups") {
  auto g10 = twisted_group({1, 0});
  CHECK(g10.relator() == W("aaaBBBBB"));
  CHECK(g10.presentation.torus.has_value());
  auto g11 = twisted_group({1, 1});
  CHECK(g11.peripheral.framing == 17);
  CHECK(g11.relator() == W("aaBaaBBABB"));
  CHECK(g11.peripheral.mu == W("bbA"));
  auto g00 = twisted_group({0, 0});
  CHECK(g00.relator() == W("aaaBB"));
  CHECK(g00.peripheral.framing == 6);
  for (int k = 0; k <= 5; ++k)
    for (int m = 0; m <= 5; ++m) CHECK(twisted_group({k, m}).peripheral.framing == 3 * (3 * k + 2) + 2 * m);
  CHECK_THROWS(twisted_group({-1, 0}));
}

TEST_CASE("peripheral words") {
  auto t23 = torus_group({2, 3});
  Word w = peripheral_word(t23, Slope::make(6, 1));
  CHECK(torus_normal_form(w, 2, 3) == torus_normal_form(W("aa"), 2, 3));
  CHECK(w == W("aa"));
  auto g11 = twisted_group({1, 1});
  CHECK(peripheral_word(g11, Slope::make(17, 1)) == g11.peripheral.s);
  CHECK(peripheral_word(g11, Slope::make(0, 1)) == g11.peripheral.lambda);
  CHECK_THROWS(peripheral_word(g11, Slope{4, 2}));
}

TEST_CASE("presentation identities") {
  auto r35 = verify_presentation_identities(torus_group({3, 5}));
  CHECK(r35.all_equal());
  for (const auto& c : r35.identities)
    if (c.name == "s = mu^f lambda") CHECK(c.method == "free");
  auto r21 = verify_presentation_identities(twisted_group({2, 1}));
  CHECK(r21.all_equal());
  for (const auto& c : r21.identities)
    if (c.derivation_length > 0) CHECK(c.replayed);
}

TEST_CASE("m = 0 degenerates to the torus formulas") {
  for (int k = 0; k <= 5; ++k) {
    auto kg = twisted_group({k, 0});
    auto t = torus_group({3, 3 * k + 2});
    CHECK(kg.relator() == Word::a(3) * Word::b(-(3 * k + 2)));
    auto rep = verify_presentation_identities(kg);
    CHECK(rep.all_equal());
    CHECK(find_invariant(rep, "m=0 relator is a^3 b^-(3k+2)")->holds);
    CHECK(find_invariant(rep, "m=0 mu is the torus alternative meridian b^(q+j) a^(i-p)")->holds);
    CHECK(kg.peripheral.framing == t.peripheral.framing);
  }
  // (0,0): mu = b a^-1
  CHECK(twisted_group({0, 0}).peripheral.mu == W("bA"));
}

TEST_CASE("abelianization of the peripheral system") {
  for (int k = 0; k <= 4; ++k)
    for (int m = 0; m <= 4; ++m) {
      auto kg = twisted_group({k, m});
      CHECK(kg.homology(kg.relator()) == 0);
      CHECK(kg.homology(kg.peripheral.mu) == 1);
      // s has image 9k+6+4m while the framing is 9k+6+2m
      CHECK(kg.homology(kg.peripheral.s) == 9 * k + 6 + 4 * m);
      CHECK(kg.homology(kg.peripheral.lambda) == 2 * m);
      auto rep = verify_presentation_identities(kg);
      CHECK(find_invariant(rep, "lambda is null-homologous")->holds == (m == 0));
    }
}

TEST_CASE("torsion endpoint") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
    auto kg = torus_group({p, q});
    auto rep = torsion_endpoint_report(kg, Slope::integer(p * q));
    CHECK(rep.ok);
    CHECK(rep.derivation_a >= 1);
    CHECK(rep.derivation_b >= 1);
  }
  CHECK_THROWS_AS(torsion_endpoint_check(torus_group({2, 3}), Slope::integer(5)), std::domain_error);
  CHECK_THROWS_AS(torsion_endpoint_check(twisted_group({1, 1}), Slope::integer(17)), std::domain_error);
}

TEST_CASE("pretzel meridian: only the (b^-1 a)^m conjugate equals mu") {
  for (int m = 1; m <= 3; ++m) {
    auto kg = twisted_group({1, m});
    Word good = Word::b(-1) * Word::a(), bad = Word::a(-1) * Word::b();
    Word core = Word::b(-3) * Word::a(2);
    CAPTURE(m);
    CHECK(equal_in_group(good.pow(-m) * core * good.pow(m), kg.peripheral.mu, kg.presentation).kind == Verdict::Equal);
    CHECK(equal_in_group(bad.pow(-m) * core * bad.pow(m), kg.peripheral.mu, kg.presentation).kind ==
          Verdict::Distinct);
  }
}
