#pragma once

// Brute-force oracles used by the tests and the acceptance binary. They share no code
// with the library's search, ball and derivation engines: words are plain strings over
// "aAbB" (uppercase = inverse) with their own free reduction.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lo/torus_normal_form.hpp"
#include "lo/word.hpp"

namespace oracle {

inline char inv_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
  }
}

inline std::string reduce(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() == inv_letter(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline std::string invert(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = inv_letter(c);
  return out;
}

inline std::string power(const std::string& w, int n) {
  std::string base = n < 0 ? invert(w) : w, out;
  for (int i = 0; i < std::abs(n); ++i) out += base;
  return reduce(out);
}

// All freely reduced words of length <= n, shortest first.
inline std::vector<std::string> reduced_words(int n) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (int len = 1; len <= n; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : std::string("aAbB"))
        if (out[i].empty() || out[i].back() != inv_letter(c)) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

// Cyclic rotations of r and r^-1.
inline std::vector<std::string> relator_conjugates(const std::string& r) {
  std::vector<std::string> out;
  for (const auto& base : {r, invert(r)})
    for (std::size_t i = 0; i < base.size(); ++i) out.push_back(base.substr(i) + base.substr(0, i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Words reachable from w by at most `depth` relator insertions (each followed by free
// reduction). Inserting a rotation at any position covers every conjugate insertion.
inline std::unordered_set<std::string> insertion_closure(const std::string& w, const std::vector<std::string>& rels,
                                                         int depth) {
  std::unordered_set<std::string> seen{w};
  std::vector<std::string> frontier{w};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::string> next;
    for (const auto& x : frontier)
      for (std::size_t pos = 0; pos <= x.size(); ++pos)
        for (const auto& r : rels) {
          std::string y = reduce(x.substr(0, pos) + r + x.substr(pos));
          if (seen.insert(y).second) next.push_back(y);
        }
    frontier = std::move(next);
  }
  return seen;
}

// Pairwise equality of `words` under derivations of at most 2 * half insertions:
// u = v is found when some word is reachable from both with <= half insertions each.
struct InsertionEquality {
  std::vector<std::vector<std::uint64_t>> bits;

  InsertionEquality(const std::vector<std::string>& words, const std::string& relator, int half) {
    const auto rels = relator_conjugates(relator);
    const std::size_t n = words.size(), nw = (n + 63) / 64;
    bits.assign(n, std::vector<std::uint64_t>(nw, 0));
    std::unordered_map<std::string, std::vector<std::uint32_t>> owners;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& x : insertion_closure(words[i], rels, half)) owners[x].push_back(static_cast<std::uint32_t>(i));
    for (const auto& [x, list] : owners)
      for (auto i : list)
        for (auto j : list) bits[i][j / 64] |= std::uint64_t{1} << (j % 64);
  }
  bool equal(std::size_t i, std::size_t j) const { return (bits[i][j / 64] >> (j % 64)) & 1; }
};

// Torus ball built from strings and keyed by normal form.
struct TorusBall {
  std::vector<std::string> elements;  // [0] is the identity
  std::vector<int> inverse;
  std::vector<std::array<int, 3>> products;
  std::unordered_map<std::string, int> index;
  int p, q;

  std::string key(const std::string& w) const {
    return lo::torus_normal_form(w.empty() ? lo::Word{} : lo::Word::parse(w), p, q).str();
  }
  int find(const std::string& w) const {
    auto it = index.find(key(w));
    return it == index.end() ? -1 : it->second;
  }

  TorusBall(int p_, int q_, int radius, const std::vector<std::string>& extra) : p(p_), q(q_) {
    auto add = [&](const std::string& w) {
      auto k = key(w);
      if (index.count(k)) return;
      index.emplace(k, static_cast<int>(elements.size()));
      elements.push_back(w);
    };
    for (const auto& w : reduced_words(radius)) add(w);
    for (const auto& w : extra) {
      add(reduce(w));
      add(invert(reduce(w)));
    }
    inverse.resize(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) inverse[i] = find(invert(elements[i]));
    for (std::size_t u = 1; u < elements.size(); ++u)
      for (std::size_t v = 1; v < elements.size(); ++v) {
        int w = find(reduce(elements[u] + elements[v]));
        if (w > 0) products.push_back({static_cast<int>(u), static_cast<int>(v), w});
      }
  }
};

enum class Outcome { Unsat, Sat, Timeout };

// Exhaustive chronological backtracking over sign assignments: every element gets a sign,
// sigma(g^-1) = -sigma(g), positive * positive stays positive, hypotheses hold.
struct SignSearch {
  Outcome outcome = Outcome::Timeout;
  std::vector<int> signs;
  std::uint64_t nodes = 0;
};

inline SignSearch exhaustive_signs(std::size_t n, const std::vector<int>& inverse,
                                   const std::vector<std::array<int, 3>>& products,
                                   const std::vector<std::pair<int, int>>& hyps, std::uint64_t max_nodes) {
  SignSearch res;
  std::vector<int> sign(n, 0);
  for (auto [e, s] : hyps) {
    if (e == 0) {
      res.outcome = Outcome::Unsat;
      return res;
    }
    if (sign[static_cast<std::size_t>(e)] == -s) {
      res.outcome = Outcome::Unsat;
      return res;
    }
    sign[static_cast<std::size_t>(e)] = s;
    int ie = inverse[static_cast<std::size_t>(e)];
    if (ie == e || sign[static_cast<std::size_t>(ie)] == s) {
      res.outcome = Outcome::Unsat;
      return res;
    }
    sign[static_cast<std::size_t>(ie)] = -s;
  }
  for (std::size_t e = 1; e < n; ++e)
    if (inverse[e] == static_cast<int>(e)) {
      res.outcome = Outcome::Unsat;  // g = g^-1 != 1 cannot carry a sign
      return res;
    }
  // variables in index order; constraints checked when their last variable is set
  std::vector<int> order;
  std::vector<int> rank(n, -1);
  for (std::size_t e = 1; e < n; ++e)
    if (static_cast<int>(e) < inverse[e]) {
      rank[e] = rank[static_cast<std::size_t>(inverse[e])] = static_cast<int>(order.size());
      order.push_back(static_cast<int>(e));
    }
  std::vector<std::vector<std::size_t>> at(order.size() + 1);
  for (std::size_t i = 0; i < products.size(); ++i) {
    const auto& t = products[i];
    int last = std::max({rank[static_cast<std::size_t>(t[0])], rank[static_cast<std::size_t>(t[1])],
                         rank[static_cast<std::size_t>(t[2])]});
    at[static_cast<std::size_t>(last)].push_back(i);
  }
  auto ok = [&](std::size_t level) {
    for (auto i : at[level]) {
      const auto& t = products[i];
      if (sign[static_cast<std::size_t>(t[0])] > 0 && sign[static_cast<std::size_t>(t[1])] > 0 &&
          sign[static_cast<std::size_t>(t[2])] < 0)
        return false;
    }
    return true;
  };
  std::vector<int> fixed(order.size(), 0);
  for (std::size_t v = 0; v < order.size(); ++v) fixed[v] = sign[static_cast<std::size_t>(order[v])];
  // iterative DFS: choice[v] in {0: untried, 1: tried +, 2: tried both}
  std::vector<int> choice(order.size(), 0);
  std::size_t v = 0;
  const std::size_t nv = order.size();
  while (true) {
    if (v == nv) {
      res.outcome = Outcome::Sat;
      res.signs = sign;
      return res;
    }
    bool placed = false;
    while (choice[v] < 2) {
      int s;
      if (fixed[v] != 0) {
        if (choice[v] > 0) {
          choice[v] = 2;
          break;
        }
        s = fixed[v];
        choice[v] = 2;
      } else {
        s = choice[v] == 0 ? 1 : -1;
        ++choice[v];
      }
      if (++res.nodes > max_nodes) return res;
      int e = order[v];
      sign[static_cast<std::size_t>(e)] = s;
      sign[static_cast<std::size_t>(inverse[static_cast<std::size_t>(e)])] = -s;
      if (ok(v)) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++v;
      continue;
    }
    // backtrack
    choice[v] = 0;
    if (fixed[v] == 0) {
      int e = order[v];
      sign[static_cast<std::size_t>(e)] = sign[static_cast<std::size_t>(inverse[static_cast<std::size_t>(e)])] = 0;
    }
    if (v == 0) {
      res.outcome = Outcome::Unsat;
      return res;
    }
    --v;
  }
}

}  // namespace oracle
