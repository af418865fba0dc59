#include "lo/case_tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace lo {

HintFactor atom(const Word& w, int repeat) { return {w, repeat, {}}; }

HintFactor composite(const Word& w, std::vector<HintFactor> parts, int repeat) {
  return {w, repeat, std::move(parts)};
}

namespace {

std::optional<Justification> justify_atom(const Word& w, const std::vector<Hypothesis>& hyps) {
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (hyps[i].sign > 0 && hyps[i].word == w) return Justification{Justification::Kind::Hypothesis, static_cast<int>(i)};
    if (hyps[i].sign < 0 && hyps[i].word.inverse() == w)
      return Justification{Justification::Kind::InverseOfNegative, static_cast<int>(i)};
  }
  return std::nullopt;
}

// Builds the certificate factors for a template, or nullopt if an atom is not known positive.
bool build_factors(const std::vector<HintFactor>& factors, const std::vector<Hypothesis>& hyps,
                   const Presentation& pres, PositivityCertificate& cert) {
  for (const auto& f : factors) {
    if (f.repeat == 0 || f.word.empty()) continue;  // degenerate parameter values
    Factor out{f.word, f.repeat, {}};
    if (f.parts.empty()) {
      auto j = justify_atom(f.word, hyps);
      if (!j) return false;
      out.why = *j;
    } else {
      PositivityCertificate sub;
      sub.id = cert.id + "/" + f.word.str();
      sub.target = f.word;
      sub.hypotheses = hyps;
      sub.group = pres;
      if (!build_factors(f.parts, hyps, pres, sub)) return false;
      out.why = {Justification::Kind::SubCertificate, static_cast<int>(cert.subs.size())};
      cert.subs.push_back(std::move(sub));
    }
    cert.factors.push_back(std::move(out));
  }
  return true;
}

// Words known negative at a leaf, paired with the hypothesis word they contradict.
std::vector<std::pair<Word, Word>> negatives(const std::vector<Hypothesis>& hyps) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& h : hyps) out.emplace_back(h.sign > 0 ? h.word.inverse() : h.word, h.word);
  return out;
}

bool known_sign(const std::vector<Hypothesis>& hyps, const Word& w) {
  for (const auto& h : hyps)
    if (h.word == w || h.word == w.inverse()) return true;
  return false;
}

struct Prover {
  const Presentation& pres;
  const Word& target;
  const std::vector<Word>& branch_words;
  const std::vector<CertificateHint>& hints;
  const CaseSplitOptions& opts;
  std::vector<std::vector<Hypothesis>> open;

  bool try_certificate(CaseNode& node, const std::string& name, const Word& goal,
                       const std::vector<HintFactor>& factors, const std::vector<Word>& chain) {
    bool is_target = goal == target;
    Word contradicted;
    if (!is_target) {
      bool neg = false;
      for (const auto& [w, h] : negatives(node.hypotheses))
        if (w == goal) {
          neg = true;
          contradicted = h;
        }
      if (!neg) return false;
    }
    PositivityCertificate cert;
    cert.id = name;
    cert.target = goal;
    cert.hypotheses = node.hypotheses;
    cert.chain = chain;
    cert.group = pres;
    if (!build_factors(factors, node.hypotheses, pres, cert)) return false;
    if (!verify_certificate(cert, opts.budget).ok) return false;
    node.outcome = is_target ? CaseNode::Outcome::Target : CaseNode::Outcome::Contradiction;
    node.hint = name;
    node.contradicted = contradicted;
    node.certificate = std::move(cert);
    return true;
  }

  bool discharge(CaseNode& node) {
    for (const auto& h : hints)
      if (try_certificate(node, h.name, h.goal, h.factors, h.chain)) return true;
    // bounded blind search over products of known-positive atoms
    std::vector<Word> atoms;
    for (const auto& h : node.hypotheses) atoms.push_back(h.sign > 0 ? h.word : h.word.inverse());
    std::vector<Word> goals{target};
    for (const auto& [w, h] : negatives(node.hypotheses)) goals.push_back(w);
    std::vector<std::size_t> idx;
    std::function<bool(int)> rec = [&](int depth) -> bool {
      if (!idx.empty()) {
        Word prod;
        for (auto i : idx) prod *= atoms[i];
        for (const auto& g : goals) {
          if (!(prod == g)) continue;
          std::vector<HintFactor> fs;
          for (auto i : idx) fs.push_back(atom(atoms[i]));
          if (try_certificate(node, "product of known-positive elements", g, fs, {})) return true;
        }
      }
      if (depth == opts.blind_factors) return false;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        idx.push_back(i);
        bool done = rec(depth + 1);
        idx.pop_back();
        if (done) return true;
      }
      return false;
    };
    return rec(0);
  }

  CaseNode prove(std::vector<Hypothesis> hyps, int depth) {
    CaseNode node;
    node.hypotheses = std::move(hyps);
    if (discharge(node)) return node;
    const Word* next = nullptr;
    for (const auto& w : branch_words)
      if (!known_sign(node.hypotheses, w)) {
        next = &w;
        break;
      }
    if (!next || depth >= opts.max_depth) {
      open.push_back(node.hypotheses);
      return node;
    }
    node.branch = *next;
    for (int s : {1, -1}) {
      auto h = node.hypotheses;
      h.push_back({*next, s});
      node.children.push_back(prove(std::move(h), depth + 1));
    }
    return node;
  }
};

}  // namespace

std::optional<PositivityCertificate> certificate_from_hint(const CertificateHint& hint,
                                                           const std::vector<Hypothesis>& hyps,
                                                           const Presentation& pres) {
  PositivityCertificate cert;
  cert.id = hint.name;
  cert.target = hint.goal;
  cert.hypotheses = hyps;
  cert.chain = hint.chain;
  cert.group = pres;
  if (!build_factors(hint.factors, hyps, pres, cert)) return std::nullopt;
  return cert;
}

CaseSplitResult case_split_prove(const Presentation& pres, const std::vector<Hypothesis>& root, const Word& target,
                                 const std::vector<Word>& branch_words, const std::vector<CertificateHint>& hints,
                                 const CaseSplitOptions& opts) {
  if (branch_words.empty()) throw std::invalid_argument("case split needs at least one branch word");
  Prover p{pres, target, branch_words, hints, opts, {}};
  CaseSplitResult res;
  res.tree.root = root;
  res.tree.target = target;
  res.tree.branch_words = branch_words;
  res.tree.node = p.prove(root, 0);
  res.undischarged = std::move(p.open);
  res.ok = res.undischarged.empty();
  return res;
}

std::size_t leaf_count(const CaseNode& n) {
  if (n.leaf()) return 1;
  std::size_t c = 0;
  for (const auto& ch : n.children) c += leaf_count(ch);
  return c;
}

namespace {

bool check_node(const CaseNode& n, const CaseTree& tree, const Presentation& pres, const Budget& budget,
                std::string& err) {
  if (n.leaf()) {
    if (n.outcome == CaseNode::Outcome::Open || !n.certificate) {
      err = "leaf left open";
      return false;
    }
    const auto& cert = *n.certificate;
    for (const auto& h : cert.hypotheses) {
      bool found = false;
      for (const auto& x : n.hypotheses) found = found || (x.word == h.word && x.sign == h.sign);
      if (!found) {
        err = "certificate cites a hypothesis not in force at its leaf";
        return false;
      }
    }
    if (n.outcome == CaseNode::Outcome::Target && !(cert.target == tree.target)) {
      err = "leaf certificate does not prove the target";
      return false;
    }
    if (n.outcome == CaseNode::Outcome::Contradiction) {
      bool neg = false;
      for (const auto& h : n.hypotheses)
        neg = neg || (h.sign > 0 ? h.word.inverse() : h.word) == cert.target;
      if (!neg) {
        err = "contradiction certificate does not target a negative word";
        return false;
      }
    }
    auto r = verify_certificate(cert, budget);
    if (!r.ok) {
      err = "leaf certificate fails: " + r.failure;
      return false;
    }
    return true;
  }
  if (n.children.size() != 2) {
    err = "branch without two children";
    return false;
  }
  for (int i = 0; i < 2; ++i) {
    const auto& ch = n.children[static_cast<std::size_t>(i)];
    Hypothesis expect{*n.branch, i == 0 ? 1 : -1};
    if (ch.hypotheses.size() != n.hypotheses.size() + 1 || !(ch.hypotheses.back().word == expect.word) ||
        ch.hypotheses.back().sign != expect.sign) {
      err = "child does not extend its parent by the branch sign";
      return false;
    }
    if (!check_node(ch, tree, pres, budget, err)) return false;
  }
  return true;
}

void used_words(const CaseNode& n, std::vector<Word>& out) {
  if (n.leaf()) return;
  if (std::find(out.begin(), out.end(), *n.branch) == out.end()) out.push_back(*n.branch);
  for (const auto& c : n.children) used_words(c, out);
}

}  // namespace

bool check_case_tree(const CaseTree& tree, const Presentation& pres, const Budget& budget, std::string* error) {
  std::string err;
  bool ok = check_node(tree.node, tree, pres, budget, err);
  if (ok) {
    std::vector<Word> words;
    used_words(tree.node, words);
    if (words.size() > 20) {
      err = "too many branch words to enumerate patterns";
      ok = false;
    }
    // leaf patterns: each leaf fixes the words on its path and leaves the rest free
    std::function<bool(const CaseNode&, std::vector<Word>&, double&)> cover =
        [&](const CaseNode& n, std::vector<Word>& path, double& mass) -> bool {
      if (n.leaf()) {
        mass += std::ldexp(1.0, -static_cast<int>(path.size()));
        return true;
      }
      if (std::find(path.begin(), path.end(), *n.branch) != path.end()) {
        err = "branch word repeated on a path";
        return false;
      }
      path.push_back(*n.branch);
      for (const auto& c : n.children)
        if (!cover(c, path, mass)) return false;
      path.pop_back();
      return true;
    };
    std::vector<Word> path;
    double mass = 0;
    if (ok && (!cover(tree.node, path, mass) || mass != 1.0)) {
      if (err.empty()) err = "leaf patterns do not partition the sign patterns";
      ok = false;
    }
  }
  if (error) *error = err;
  return ok;
}

}  // namespace lo
