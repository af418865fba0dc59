#include "lo/planner.hpp"

#include <sstream>
#include <stdexcept>

namespace lo {

namespace {

std::string range_str(const std::vector<int>& v) {
  if (v.empty()) return "{}";
  bool contiguous = true;
  for (std::size_t i = 1; i < v.size(); ++i) contiguous = contiguous && v[i] == v[i - 1] + 1;
  if (contiguous && v.size() > 1) return std::to_string(v.front()) + ".." + std::to_string(v.back());
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string slope_word(const Slope& s) {
  std::ostringstream os;
  os << "mu^" << s.p << " lambda";
  if (s.q != 1) os << "^" << s.q;
  return os.str();
}

Evidence row_evidence(const ImplicationRow& row, const std::string& label) {
  Evidence ev;
  ev.id = "cone:" + label + ":" + row.positive.str() + "->" + row.negative.str();
  ev.kind = "cone-search";
  ev.positive = row.positive;
  ev.negative = row.negative;
  ev.certified = row.result.status == SearchStatus::Unsat;
  ev.detail = std::string(to_string(row.result.status)) + " at radius " + std::to_string(row.radius) + ", " +
              std::to_string(row.ball_size) + " elements" + (row.exact ? "" : " (inexact ball)");
  if (row.result.status == SearchStatus::Unsat) ev.detail += ", trace " + std::to_string(trace_size(row.result.trace)) + " steps";
  if (!row.result.reason.empty()) ev.detail += ": " + row.result.reason;
  return ev;
}

// Family evidence: every certificate, identity and case tree of the suite verified.
Evidence suite_evidence(const CertificateSuite& suite, const Slope& base, const std::vector<int>& N_range,
                        const std::string& scope) {
  Evidence ev;
  ev.id = "family:" + suite.family;
  ev.kind = "certificate-family";
  ev.positive = base;
  ev.negative = Slope::make(1, 0);
  ev.certified = suite.all_ok();
  ev.detail = std::to_string(suite.passed()) + "/" + std::to_string(suite.total()) + " checks passed for " + scope +
              ", N in " + range_str(N_range) + "; shapes:";
  for (const auto& s : suite.shapes) ev.detail += " [" + s + "]";
  return ev;
}

void add_upper(PlannedObstruction& out, const Slope& base, const std::vector<Evidence>& per_n,
               const std::optional<Evidence>& family) {
  auto finite = monotone_obstruction(base, per_n, std::nullopt);
  for (auto& c : finite.components) out.report.components.push_back(c);
  if (family && family->certified) {
    auto all = monotone_obstruction(base, per_n, family);
    for (auto& c : all.components) out.report.components.push_back(c);
    out.report.caveats.push_back("coverage of all N above " + base.str() +
                                 " rests on N-independent certificate shapes checked pointwise, not on an induction");
  } else if (finite.gap) {
    out.report.caveats.push_back(*finite.gap);
  }
}

void plan_torus(PlannedObstruction& out, const PlannerConfig& cfg, int p, int q) {
  const KnotGroup& kg = out.group;
  const std::int64_t pq = static_cast<std::int64_t>(p) * q;
  const Slope base = Slope::integer(pq);
  const std::string label = "torus-" + std::to_string(p) + "-" + std::to_string(q);
  ImplicationOptions io;
  io.min_radius = cfg.min_radius;
  io.ball = cfg.ball;
  io.ball.equality = cfg.budget;

  out.proof_family = ProofFamily::Torus;
  out.proof_params = FamilyParams{p, q, 0, 0};
  out.suite = certify_family_identities(ProofFamily::Torus, out.proof_params, cfg.torus_n, cfg.family_N, cfg.budget);

  // (pq-1, pq)
  out.endpoint = implication_check(kg, base, {-1}, cfg.radius, io);
  std::vector<Evidence> low;
  for (const auto& row : out.endpoint) low.push_back(row_evidence(row, label));
  for (const auto& t : out.suite->trees) {
    if (t.id != "torus-endpoint-tree") continue;
    Evidence ev{"case-tree:" + label + ":endpoint", "case-tree", base, Slope::integer(pq - 1),
                t.result.ok && t.checked,
                t.result.ok ? std::to_string(leaf_count(t.result.tree.node)) + " leaves, branch words a, b" : t.error};
    low.push_back(ev);
  }
  std::optional<ObstructionComponent> below;
  for (const auto& ev : low) {
    out.report.evidence.push_back(ev);
    if (!ev.certified) continue;
    if (!below) {
      below = interval_obstruction(Slope::integer(pq - 1), base, ev);
    } else {
      below->evidence.push_back(ev.id);
    }
  }
  if (below) {
    out.report.components.push_back(*below);
  } else {
    out.report.caveats.push_back("no certified evidence for (" + std::to_string(pq - 1) + ", " + std::to_string(pq) + ")");
  }
  out.report.hypotheses.push_back(slope_word(base) + " > 1 implies " + slope_word(Slope::integer(pq - 1)) +
                                  " > 1 (cone search and case split on a, b)");

  // {pq}
  auto tc = torsion_endpoint_report(kg, base);
  out.torsion = tc.ok;
  Evidence tev{"torsion:" + label, "torsion-quotient", base, base, tc.ok,
               "a^" + std::to_string(p) + " = 1 in " + std::to_string(tc.derivation_a) + " steps, b^" +
                   std::to_string(q) + " = 1 in " + std::to_string(tc.derivation_b) + " steps"};
  out.report.evidence.push_back(tev);
  if (tc.ok) {
    ObstructionComponent c;
    c.kind = ComponentKind::Point;
    c.lo = base.value();
    c.provenance = "torsion-endpoint";
    c.evidence.push_back(tev.id);
    out.report.components.push_back(c);
  } else {
    out.report.caveats.push_back("torsion check failed at " + base.str());
  }

  // (pq, inf)
  out.table = implication_check(kg, base, cfg.cone_N, cfg.radius, io);
  std::vector<Evidence> per_n;
  for (const auto& row : out.table) {
    per_n.push_back(row_evidence(row, label));
    out.report.evidence.push_back(per_n.back());
  }
  out.report.hypotheses.push_back(slope_word(base) + " > 1 implies " + slope_word(base) + " mu^N > 1, N in " +
                                  range_str(cfg.cone_N) + " (cone search)");
  std::optional<Evidence> fam;
  if (!cfg.family_N.empty()) {
    fam = suite_evidence(*out.suite, base, cfg.family_N, "n in " + range_str(cfg.torus_n));
    out.report.evidence.push_back(*fam);
    out.report.hypotheses.push_back("same implication for all N > 0 (certificate family, " + fam->detail + ")");
  }
  add_upper(out, base, per_n, fam);
  out.report.caveats.push_back("case hypotheses use the least n with b^(nj) a^(ni) > 1; identities are checked for n in " +
                               range_str(cfg.torus_n) + " and that minimality is not mechanized");
  out.report.caveats.push_back("endpoint " + std::to_string(pq - 1) +
                               ": the closed bound r >= pq-1 is not derivable from the implemented checks, "
                               "which certify only the open interval above it; unverified and excluded from the set");
}

void plan_twisted(PlannedObstruction& out, const PlannerConfig& cfg, std::optional<ProofFamily> pf,
                  const FamilyParams& fp) {
  const KnotGroup& kg = out.group;
  const Slope base = Slope::integer(kg.peripheral.framing);
  const std::string label = "twisted-" + std::to_string(kg.k) + "-" + std::to_string(kg.m);
  ImplicationOptions io;
  io.min_radius = cfg.min_radius;
  io.ball = cfg.ball;
  io.ball.equality = cfg.budget;
  out.table = implication_check(kg, base, cfg.twisted_cone_N, cfg.twisted_radius, io);
  std::vector<Evidence> per_n;
  for (const auto& row : out.table) {
    per_n.push_back(row_evidence(row, label));
    out.report.evidence.push_back(per_n.back());
  }
  out.report.hypotheses.push_back("s = " + slope_word(base) + " > 1 implies mu^N s > 1, N in " +
                                  range_str(cfg.twisted_cone_N) + " (cone search, radius <= " +
                                  std::to_string(cfg.twisted_radius) + ")");
  std::optional<Evidence> fam;
  if (pf && !cfg.family_N.empty()) {
    out.proof_family = pf;
    out.proof_params = fp;
    out.suite = certify_family_identities(*pf, fp, {1}, cfg.family_N, cfg.budget);
    fam = suite_evidence(*out.suite, base, cfg.family_N, family_label(*pf, fp));
    out.report.evidence.push_back(*fam);
    std::size_t leaves = 0;
    for (const auto& t : out.suite->trees) leaves += leaf_count(t.result.tree.node);
    out.report.hypotheses.push_back("s > 1 implies mu^N s > 1 for all N > 0 (case trees with " + std::to_string(leaves) +
                                    " leaves in total, " + fam->detail + ")");
  } else {
    out.report.caveats.push_back("no certificate family for (k, m) = (" + std::to_string(kg.k) + ", " +
                                 std::to_string(kg.m) + "); only the cone-search table is used");
  }
  add_upper(out, base, per_n, fam);
}

}  // namespace

PlannedObstruction plan_obstruction(const KnotRequest& req, const PlannerConfig& cfg) {
  PlannedObstruction out;
  if (req.family == Family::Torus) {
    out.group = torus_group({req.p, req.q});
    out.report.knot = out.group.label;
    plan_torus(out, cfg, req.p, req.q);
  } else {
    if (req.k < 0 || req.m < 0) throw std::invalid_argument("k and m must be non-negative");
    if (req.m == 0 && req.k != 1) {
      // the m = 0 group is the (3, 3k+2) torus knot group with the same relator
      out.group = torus_group({3, 3 * req.k + 2});
      out.report.knot = twisted_group({req.k, 0}).label + " (torus knot group)";
      out.report.caveats.push_back("m = 0: planned in torus coordinates for (3, " + std::to_string(3 * req.k + 2) +
                                   "); both meridian forms are equal in the group");
      plan_torus(out, cfg, 3, 3 * req.k + 2);
    } else {
      out.group = twisted_group({req.k, req.m});
      out.report.knot = out.group.label;
      std::optional<ProofFamily> pf;
      FamilyParams fp;
      if (req.k == 1) {
        pf = ProofFamily::Pretzel;
        fp.m = req.m;
      } else if (req.m == 1) {
        pf = ProofFamily::Twisted1;
        fp.k = req.k;
      }
      plan_twisted(out, cfg, pf, fp);
    }
  }
  out.report.merged = merge_components(out.report.components);
  return out;
}

}  // namespace lo
