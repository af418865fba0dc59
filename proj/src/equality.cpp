#include "lo/equality.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "lo/torus_normal_form.hpp"

namespace lo {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

using Letters = std::vector<Letter>;

std::string key_of(const Letters& w) { return std::string(w.begin(), w.end()); }

// A rotation rho = y x of r_i^sign = x y, split at `cut` = |x|.
struct Rotation {
  Letters rho;
  Word x;
  int relator;
  int sign;
};

std::vector<Rotation> rotations_of(const Presentation& pres) {
  std::vector<Rotation> out;
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    for (int sign : {1, -1}) {
      Letters r = pres.relators[i].pow(sign).letters();
      for (std::size_t cut = 0; cut < r.size(); ++cut) {
        Letters rho(r.begin() + static_cast<std::ptrdiff_t>(cut), r.end());
        rho.insert(rho.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(cut));
        Letters x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(cut));
        out.push_back({std::move(rho), Word::from_letters(x), static_cast<int>(i), sign});
      }
    }
  }
  return out;
}

// Kills f rho f^-1 where rho is the rotation.
DerivationStep kill_step(const Word& f, const Rotation& rot) {
  return {f * rot.x.inverse(), rot.relator, -rot.sign};
}

void cyclic_reduce_letters(Letters& w, Letters* head) {
  reduce_letters(w);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  if (head) head->assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(lo));
  w = Letters(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Letters min_rotation(const Letters& w) {
  Letters best = w;
  Letters cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

std::optional<Derivation> single_relator_step(const Word& w, const Presentation& pres) {
  if (w.empty()) return Derivation{};
  Word t;
  Word core = cyclic_core(w, &t);
  Letters c = core.letters();
  for (const auto& rot : rotations_of(pres)) {
    if (rot.rho == c) {
      Derivation d;
      d.steps.push_back(kill_step(t, rot));
      return d;
    }
  }
  return std::nullopt;
}

std::optional<Derivation> search_derivation(const Word& w, const Presentation& pres,
                                            const Budget& budget, std::size_t* nodes_out) {
  if (w.empty()) return Derivation{};
  if (pres.relators.empty()) return std::nullopt;
  const auto rots = rotations_of(pres);
  std::unordered_map<std::string, std::size_t> rot_index;
  for (std::size_t i = 0; i < rots.size(); ++i) rot_index.emplace(key_of(rots[i].rho), i);

  std::int64_t max_rel = 0;
  for (const auto& r : pres.relators) max_rel = std::max(max_rel, r.length());
  const std::size_t cap =
      static_cast<std::size_t>(budget.length_factor * std::max(w.length(), max_rel));

  struct Node {
    Letters cyc;   // cyclically reduced current word
    Word frame;    // current word is frame cyc frame^-1
    int depth;
    int parent;
    DerivationStep step;
  };
  std::vector<Node> nodes;
  Letters start = w.letters();
  Letters head;
  cyclic_reduce_letters(start, &head);
  nodes.push_back({start, Word::from_letters(head), 0, -1, {}});

  auto rebuild = [&](int idx, std::optional<DerivationStep> last) {
    Derivation d;
    std::vector<DerivationStep> rev;
    if (last) rev.push_back(*last);
    for (int i = idx; nodes[static_cast<std::size_t>(i)].parent >= 0; i = nodes[static_cast<std::size_t>(i)].parent)
      rev.push_back(nodes[static_cast<std::size_t>(i)].step);
    d.steps.assign(rev.rbegin(), rev.rend());
    return d;
  };

  using Key = std::tuple<std::size_t, int, int>;  // length, depth, node
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> open;
  std::unordered_set<std::string> seen;
  seen.insert(key_of(min_rotation(start)));
  open.emplace(start.size(), 0, 0);
  std::size_t popped = 0;

  while (!open.empty() && popped < budget.max_nodes) {
    auto [len, depth, idx] = open.top();
    open.pop();
    ++popped;
    const Node cur = nodes[static_cast<std::size_t>(idx)];
    if (cur.cyc.empty()) {
      if (nodes_out) *nodes_out = popped;
      return rebuild(idx, std::nullopt);
    }
    if (depth + 1 > budget.max_insertions) continue;
    auto hit = rot_index.find(key_of(cur.cyc));
    if (hit != rot_index.end()) {
      if (nodes_out) *nodes_out = popped;
      return rebuild(idx, kill_step(cur.frame, rots[hit->second]));
    }
    if (depth + 2 > budget.max_insertions) continue;
    const std::size_t n = cur.cyc.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& rot : rots) {
        if (rot.rho[0] != cur.cyc[i]) continue;
        std::size_t a = 0;
        while (a < rot.rho.size() && a < n && cur.cyc[(i + a) % n] == rot.rho[a]) ++a;
        // Replace the matched piece alpha of rho = alpha gamma by gamma^-1.
        Letters next;
        next.reserve(n - a + rot.rho.size() - a);
        for (std::size_t k = rot.rho.size(); k > a; --k) next.push_back(static_cast<Letter>(-rot.rho[k - 1]));
        for (std::size_t k = a; k < n; ++k) next.push_back(cur.cyc[(i + k) % n]);
        Letters h;
        cyclic_reduce_letters(next, &h);
        if (next.size() > cap) continue;
        if (!seen.insert(key_of(min_rotation(next))).second) continue;
        Letters prefix(cur.cyc.begin(), cur.cyc.begin() + static_cast<std::ptrdiff_t>(i));
        Word f1 = cur.frame * Word::from_letters(prefix);
        // Inserting rho^-1 = x^-1 r^-sign x at the front of the rotated word.
        DerivationStep st{f1 * rot.x.inverse(), rot.relator, -rot.sign};
        Word f2 = f1 * Word::from_letters(h);
        nodes.push_back({std::move(next), std::move(f2), depth + 1, idx, std::move(st)});
        int id = static_cast<int>(nodes.size() - 1);
        open.emplace(nodes.back().cyc.size(), depth + 1, id);
      }
    }
  }
  if (nodes_out) *nodes_out = popped;
  return std::nullopt;
}

EqualityVerdict equal_in_group(const Word& u, const Word& v, const Presentation& pres,
                               const Budget& budget) {
  EqualityVerdict out;
  if (u == v) {
    out.kind = Verdict::Equal;
    out.method = "free";
    out.has_derivation = true;
    return out;
  }
  if (pres.torus) {
    auto [p, q] = *pres.torus;
    if (torus_normal_form(u, p, q) == torus_normal_form(v, p, q)) {
      out.kind = Verdict::Equal;
      out.method = "normal-form";
      if (auto d = single_relator_step(u * v.inverse(), pres)) {
        out.derivation = *d;
        out.has_derivation = true;
      }
      return out;
    }
    out.kind = Verdict::Distinct;
    out.method = "normal-form";
    out.witness = find_separating_quotient(u, v, pres, budget.quotient_degree);
    return out;
  }
  if (pres.relators.empty()) {
    out.kind = Verdict::Distinct;
    out.method = "free";
    out.witness = find_separating_quotient(u, v, pres, budget.quotient_degree);
    return out;
  }
  Word d = u * v.inverse();
  if (auto st = single_relator_step(d, pres)) {
    out.kind = Verdict::Equal;
    out.method = "relator-search";
    out.derivation = *st;
    out.has_derivation = true;
    out.nodes = 1;
    return out;
  }
  if (auto found = search_derivation(d, pres, budget, &out.nodes)) {
    out.kind = Verdict::Equal;
    out.method = "relator-search";
    out.derivation = *found;
    out.has_derivation = true;
    return out;
  }
  if (auto wit = find_separating_quotient(u, v, pres, budget.quotient_degree)) {
    out.kind = Verdict::Distinct;
    out.method = "quotient";
    out.witness = wit;
    return out;
  }
  out.kind = Verdict::Unknown;
  out.method = "budget";
  return out;
}

ChainResult prove_chain(const std::vector<Word>& links, const Presentation& pres,
                        const Budget& budget) {
  ChainResult res;
  for (std::size_t i = 0; i + 1 < links.size(); ++i) {
    auto v = equal_in_group(links[i], links[i + 1], pres, budget);
    if (!v.equal()) {
      res.failed_link = i;
      return res;
    }
    if (!v.has_derivation) res.replayable = false;
    res.derivation = compose(res.derivation, v.derivation);
  }
  res.ok = true;
  return res;
}

}  // namespace lo
