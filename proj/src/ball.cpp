#include "lo/ball.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "lo/finite_quotient.hpp"
#include "lo/torus_normal_form.hpp"

namespace lo {

std::string Ball::key_of(const Word& w) const {
  if (mode == Mode::Torus) return torus_normal_form(w, presentation.torus->p, presentation.torus->q).str();
  return w.str();
}

std::optional<int> Ball::find(const Word& w) const {
  auto it = key_index.find(key_of(w));
  if (it == key_index.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Ball::multiply(int u, int v) const {
  return find(elements[static_cast<std::size_t>(u)] * elements[static_cast<std::size_t>(v)]);
}

namespace {

// All freely reduced words of length <= radius in shortlex order.
std::vector<Word> enumerate_words(int radius, std::size_t cap) {
  std::vector<std::vector<Letter>> layer{{}};
  std::vector<Word> out{Word()};
  const Letter alphabet[4] = {1, -1, 2, -2};
  for (int len = 1; len <= radius; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (Letter l : alphabet) {
        if (!w.empty() && w.back() == -l) continue;
        auto x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) {
      return Word::from_letters(x) < Word::from_letters(y);
    });
    for (const auto& w : next) out.push_back(Word::from_letters(w));
    if (out.size() > cap) throw std::length_error("ball enumeration exceeds the element cap");
    layer = std::move(next);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) return {-s0, -t0};
  return {s0, t0};
}

// Image of w in H1 = Z^2 / <exponent vectors of relators>, as a comparable key.
struct Homology {
  std::vector<std::array<std::int64_t, 2>> rel;
  std::string key(const Word& w) const {
    std::int64_t x = w.exp_sum(Gen::A), y = w.exp_sum(Gen::B);
    if (rel.empty()) return std::to_string(x) + "," + std::to_string(y);
    // one-relator case; several relators fall back to the first one (a coarser but sound key)
    std::int64_t ra = rel[0][0], rb = rel[0][1];
    if (ra == 0 && rb == 0) return std::to_string(x) + "," + std::to_string(y);
    std::int64_t g = std::gcd(ra, rb);
    std::int64_t px = ra / g, py = rb / g;
    std::int64_t cross = x * py - y * px;
    if (rel.size() > 1) return std::to_string(cross);
    // coordinate along (px,py) via a Bezout pair u px + v py = 1
    auto [u, v] = bezout(px, py);
    std::int64_t along = ((x * u + y * v) % g + g) % g;
    return std::to_string(cross) + "/" + std::to_string(along);
  }
};

std::string signature(const Word& w, const Homology& h, const std::vector<FiniteQuotientWitness>& quots) {
  std::string key = h.key(w);
  for (const auto& q : quots) {
    key.push_back('|');
    for (auto x : q.image(w).images()) key.push_back(static_cast<char>('0' + x));
  }
  return key;
}

}  // namespace

Ball build_ball(const Presentation& pres, int radius, const BallBudget& budget, const std::vector<Word>& extra) {
  if (radius < 1) throw std::invalid_argument("ball radius must be at least 1");
  Ball ball;
  ball.presentation = pres;
  ball.radius = radius;
  ball.exact = true;
  if (pres.torus) {
    ball.mode = Ball::Mode::Torus;
  } else if (pres.relators.empty()) {
    ball.mode = Ball::Mode::Free;
  } else {
    ball.mode = Ball::Mode::Words;
  }

  std::vector<Word> words = enumerate_words(radius, budget.max_elements * 64);
  for (const auto& w : extra) {
    words.push_back(w);
    words.push_back(w.inverse());
  }

  auto add_element = [&](const Word& w) {
    ball.elements.push_back(w);
    return static_cast<int>(ball.elements.size() - 1);
  };

  if (ball.mode != Ball::Mode::Words) {
    for (const auto& w : words) {
      std::string k = ball.key_of(w);
      if (ball.key_index.count(k)) continue;
      ball.key_index.emplace(std::move(k), add_element(w));
      if (ball.elements.size() > budget.max_elements) throw std::length_error("ball exceeds the element cap");
    }
  } else {
    // Distinctness comes from H1 and finite quotients; equal signatures need a proof of
    // equality (merge) or a separating quotient, otherwise the ball is marked inexact.
    Homology h;
    for (const auto& r : pres.relators) h.rel.push_back({r.exp_sum(Gen::A), r.exp_sum(Gen::B)});
    auto quots = enumerate_quotients(pres, budget.equality.quotient_degree);
    ball.notes.push_back("separating invariants: H1 and " + std::to_string(quots.size()) + " permutation quotients");
    Budget merge_budget = budget.equality;
    merge_budget.quotient_degree = 0;  // the signature already used every quotient
    std::map<std::string, std::vector<int>> buckets;
    std::size_t pairs = 0, merged = 0, unresolved = 0;
    std::vector<int> inv_of{0};
    auto classify = [&](const Word& w, const std::string& sig, bool& undecided) -> std::optional<int> {
      for (int e : buckets[sig]) {
        if (pairs >= budget.max_merge_pairs) {
          undecided = true;
          return std::nullopt;
        }
        ++pairs;
        auto v = equal_in_group(w, ball.elements[static_cast<std::size_t>(e)], pres, merge_budget);
        if (v.kind == Verdict::Equal) return e;
        if (v.kind == Verdict::Unknown) undecided = true;
      }
      return std::nullopt;
    };
    ball.key_index.emplace(Word().str(), add_element(Word()));
    buckets[signature(Word(), h, quots)].push_back(0);
    for (const auto& w : words) {
      std::string wk = w.str();
      if (ball.key_index.count(wk)) continue;
      Word wi = w.inverse();
      std::string sig = signature(w, h, quots), sig_i = signature(wi, h, quots);
      bool undecided = false;
      if (auto same = classify(w, sig, undecided)) {
        // w^-1 follows its class, which keeps the inverse map an involution
        ++merged;
        ball.key_index.emplace(wk, *same);
        ball.key_index.emplace(wi.str(), inv_of[static_cast<std::size_t>(*same)]);
        continue;
      }
      if (undecided) ++unresolved;
      int id = add_element(w);
      buckets[sig].push_back(id);
      ball.key_index.emplace(wk, id);
      inv_of.push_back(id);
      bool self = false;
      if (sig == sig_i) {
        auto v = equal_in_group(w, wi, pres, merge_budget);
        ++pairs;
        if (v.kind == Verdict::Equal) self = true;
        if (v.kind == Verdict::Unknown) ++unresolved;
      }
      if (self) {
        ball.key_index.emplace(wi.str(), id);
      } else {
        int iid = add_element(wi);
        buckets[sig_i].push_back(iid);
        ball.key_index.emplace(wi.str(), iid);
        inv_of.push_back(id);
        inv_of[static_cast<std::size_t>(id)] = iid;
      }
      if (ball.elements.size() > budget.max_elements) throw std::length_error("ball exceeds the element cap");
    }
    ball.notes.push_back("merged " + std::to_string(merged) + " words; " + std::to_string(pairs) +
                         " equality checks");
    if (unresolved > 0) {
      ball.exact = false;
      ball.notes.push_back(std::to_string(unresolved) + " elements neither merged nor separated");
    }
  }

  const std::size_t n = ball.elements.size();
  ball.inverse.assign(n, -1);
  for (std::size_t e = 0; e < n; ++e) {
    auto inv = ball.find(ball.elements[e].inverse());
    if (!inv) throw std::logic_error("ball not closed under inversion");
    ball.inverse[e] = *inv;
  }
  for (std::size_t u = 1; u < n; ++u) {
    for (std::size_t v = 1; v < n; ++v) {
      if (static_cast<int>(v) == ball.inverse[u]) continue;
      auto w = ball.multiply(static_cast<int>(u), static_cast<int>(v));
      if (w && *w != 0) ball.products.push_back({static_cast<int>(u), static_cast<int>(v), *w});
    }
  }
  return ball;
}

}  // namespace lo
