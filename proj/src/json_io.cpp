#include "lo/json_io.hpp"

#include <stdexcept>

namespace lo {

namespace {

std::string wstr(const Word& w) { return w.empty() ? "1" : w.str(); }

Word wparse(const std::string& s) { return s == "1" ? Word{} : Word::parse(s); }

Json steps_json(const Ball& ball, const std::vector<TraceStep>& steps, const std::string& prefix) {
  Json out = Json::array();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    Json j;
    j["step"] = prefix + std::to_string(i + 1);
    j["kind"] = s.kind;
    j["operands"] = s.operands;
    Json elems = Json::array();
    for (int e : s.elems) elems.push_back(wstr(ball.elements[static_cast<std::size_t>(e)]));
    j["elements"] = elems;
    if (!s.cases.empty()) {
      Json cases = Json::array();
      for (std::size_t c = 0; c < s.cases.size(); ++c)
        cases.push_back({{"sign", s.cases[c].sign > 0 ? "+" : "-"},
                         {"steps", steps_json(ball, s.cases[c].steps, prefix + std::to_string(i + 1) + "." +
                                                                          std::to_string(c + 1) + ".")}});
      j["cases"] = cases;
    }
    out.push_back(j);
  }
  return out;
}

Json node_json(const CaseNode& n) {
  Json j;
  if (!n.leaf()) {
    j["branch"] = wstr(*n.branch);
    j["positive"] = node_json(n.children[0]);
    j["negative"] = node_json(n.children[1]);
    return j;
  }
  const char* outcome = n.outcome == CaseNode::Outcome::Target          ? "target"
                        : n.outcome == CaseNode::Outcome::Contradiction ? "contradiction"
                                                                        : "open";
  j["outcome"] = outcome;
  Json hyps = Json::array();
  for (const auto& h : n.hypotheses) hyps.push_back(to_json(h));
  j["hypotheses"] = hyps;
  if (!n.hint.empty()) j["by"] = n.hint;
  if (n.outcome == CaseNode::Outcome::Contradiction) j["contradicts"] = wstr(n.contradicted);
  if (n.certificate) j["certificate"] = to_json(*n.certificate);
  return j;
}

Json rational_json(const Rational& r) { return rational_str(r); }

}  // namespace

Json with_schema(const std::string& kind, Json body) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["kind"] = kind;
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

Json to_json(const Presentation& pres) {
  Json j;
  j["generators"] = {"a", "b"};
  Json rels = Json::array();
  for (const auto& r : pres.relators) rels.push_back(wstr(r));
  j["relators"] = rels;
  if (pres.torus) j["torus"] = {{"p", pres.torus->p}, {"q", pres.torus->q}};
  return j;
}

Json to_json(const KnotGroup& kg) {
  Json j;
  j["label"] = kg.label;
  j["generators"] = {"a", "b"};
  j["relator"] = wstr(kg.relator());
  j["mu"] = wstr(kg.peripheral.mu);
  j["lambda"] = wstr(kg.peripheral.lambda);
  j["s"] = wstr(kg.peripheral.s);
  j["framing"] = kg.peripheral.framing;
  if (kg.family == Family::Torus) {
    j["family"] = "torus";
    j["p"] = kg.p;
    j["q"] = kg.q;
    j["i"] = kg.i;
    j["j"] = kg.j;
  } else {
    j["family"] = "twisted";
    j["k"] = kg.k;
    j["m"] = kg.m;
    j["q"] = 3 * kg.k + 2;
  }
  return j;
}

Json to_json(const IdentityReport& rep) {
  Json j;
  j["label"] = rep.label;
  j["all_equal"] = rep.all_equal();
  Json ids = Json::array();
  for (const auto& c : rep.identities)
    ids.push_back({{"name", c.name},
                   {"lhs", wstr(c.lhs)},
                   {"rhs", wstr(c.rhs)},
                   {"verdict", to_string(c.verdict)},
                   {"method", c.method},
                   {"derivation_length", c.derivation_length},
                   {"replayed", c.replayed},
                   {"nodes", c.nodes}});
  j["identities"] = ids;
  Json inv = Json::array();
  for (const auto& c : rep.invariants) inv.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}, {"informational", c.informational}});
  j["invariants"] = inv;
  return j;
}

Json to_json(const Hypothesis& h) { return {{"word", wstr(h.word)}, {"sign", h.sign > 0 ? "+" : "-"}}; }

Json to_json(const PositivityCertificate& cert) {
  Json j;
  if (!cert.id.empty()) j["id"] = cert.id;
  j["target"] = wstr(cert.target);
  Json hyps = Json::array();
  for (const auto& h : cert.hypotheses) hyps.push_back(to_json(h));
  j["hypotheses"] = hyps;
  Json fs = Json::array();
  for (const auto& f : cert.factors) {
    Json fj;
    fj["word"] = wstr(f.word);
    if (f.repeat != 1) fj["repeat"] = f.repeat;
    fj["justification"] = {{"kind", to_string(f.why.kind)}, {"index", f.why.index}};
    fs.push_back(fj);
  }
  j["factors"] = fs;
  if (!cert.chain.empty()) {
    Json ch = Json::array();
    for (const auto& w : cert.chain) ch.push_back(wstr(w));
    j["chain"] = ch;
  }
  if (!cert.subs.empty()) {
    Json subs = Json::array();
    for (const auto& s : cert.subs) subs.push_back(to_json(s));
    j["subcertificates"] = subs;
  }
  return j;
}

Json to_json(const CertificateReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  j["equality"] = rep.equality;
  j["positive"] = rep.positive;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  if (!rep.method.empty()) j["method"] = rep.method;
  j["derivation_length"] = rep.derivation_length;
  j["replayable"] = rep.replayable;
  return j;
}

Json to_json(const CaseTree& tree) {
  Json j;
  Json root = Json::array();
  for (const auto& h : tree.root) root.push_back(to_json(h));
  j["root"] = root;
  j["target"] = wstr(tree.target);
  Json bw = Json::array();
  for (const auto& w : tree.branch_words) bw.push_back(wstr(w));
  j["branch_words"] = bw;
  j["leaves"] = leaf_count(tree.node);
  j["tree"] = node_json(tree.node);
  return j;
}

Json to_json(const CertificateSuite& suite) {
  Json j;
  j["family"] = suite.family;
  j["label"] = suite.label;
  j["passed"] = suite.passed();
  j["total"] = suite.total();
  j["all_ok"] = suite.all_ok();
  Json certs = Json::array();
  for (const auto& c : suite.certificates)
    certs.push_back({{"id", c.id}, {"params", c.params}, {"report", to_json(c.report)}, {"certificate", to_json(c.cert)}});
  j["certificates"] = certs;
  Json ids = Json::array();
  for (const auto& i : suite.identities)
    ids.push_back({{"id", i.id},
                   {"params", i.params},
                   {"lhs", wstr(i.lhs)},
                   {"rhs", wstr(i.rhs)},
                   {"verdict", to_string(i.verdict)},
                   {"method", i.method}});
  j["identities"] = ids;
  Json trees = Json::array();
  for (const auto& t : suite.trees) {
    Json tj{{"id", t.id}, {"params", t.params}, {"ok", t.result.ok && t.checked}};
    if (!t.error.empty()) tj["error"] = t.error;
    tj["case_tree"] = to_json(t.result.tree);
    trees.push_back(tj);
  }
  j["trees"] = trees;
  j["shapes"] = suite.shapes;
  return j;
}

Json trace_json(const Ball& ball, const std::vector<TraceStep>& trace) { return steps_json(ball, trace, ""); }

Json to_json(const Ball& ball, const std::vector<Hypothesis>& hyps, const SearchResult& res) {
  Json j;
  j["status"] = to_string(res.status);
  Json hs = Json::array();
  for (const auto& h : hyps) hs.push_back(to_json(h));
  j["hypotheses"] = hs;
  j["ball"] = {{"radius", ball.radius},
               {"elements", ball.size()},
               {"products", ball.products.size()},
               {"exact", ball.exact},
               {"notes", ball.notes}};
  j["search"] = {{"variables", res.variables}, {"clauses", res.clauses}, {"decisions", res.decisions}};
  if (res.degenerate) j["degenerate"] = true;
  if (!res.reason.empty()) j["reason"] = res.reason;
  if (res.status == SearchStatus::Unsat) j["trace"] = trace_json(ball, res.trace);
  if (res.status == SearchStatus::Sat) {
    Json pos = Json::array();
    for (std::size_t e = 1; e < ball.size(); ++e)
      if (res.signs[e] > 0) pos.push_back(wstr(ball.elements[e]));
    j["positive_elements"] = pos;
  }
  return j;
}

Json to_json(const ImplicationRow& row) {
  Json j;
  j["N"] = row.N;
  j["positive"] = row.positive.str();
  j["negative"] = row.negative.str();
  j["status"] = to_string(row.result.status);
  j["radius"] = row.radius;
  j["radii_tried"] = row.tried;
  j["ball_elements"] = row.ball_size;
  j["exact"] = row.exact;
  j["decisions"] = row.result.decisions;
  if (row.result.status == SearchStatus::Unsat) j["trace_steps"] = trace_size(row.result.trace);
  if (!row.result.reason.empty()) j["reason"] = row.result.reason;
  return j;
}

Json to_json(const ObstructionComponent& c) {
  Json j;
  j["kind"] = c.kind == ComponentKind::Point ? "point" : "interval";
  j["lo"] = rational_json(c.lo);
  if (c.kind == ComponentKind::Interval) {
    j["hi"] = c.hi ? Json(rational_json(*c.hi)) : Json("inf");
    j["lo_closed"] = c.lo_closed;
    j["hi_closed"] = c.hi_closed;
  }
  j["text"] = c.str();
  j["provenance"] = c.provenance;
  j["evidence"] = c.evidence;
  return j;
}

Json to_json(const Evidence& ev) {
  return {{"id", ev.id},
          {"kind", ev.kind},
          {"positive", ev.positive.str()},
          {"negative", ev.negative.str()},
          {"certified", ev.certified},
          {"detail", ev.detail}};
}

Json to_json(const ObstructionReport& rep) {
  Json j;
  j["knot"] = rep.knot;
  j["hypotheses"] = rep.hypotheses;
  Json comps = Json::array();
  for (const auto& c : rep.components) comps.push_back(to_json(c));
  j["components"] = comps;
  Json merged = Json::array();
  for (const auto& c : rep.merged) merged.push_back(to_json(c));
  j["obstructed"] = merged;
  Json ev = Json::array();
  for (const auto& e : rep.evidence) ev.push_back(to_json(e));
  j["evidence"] = ev;
  j["caveats"] = rep.caveats;
  return j;
}

Json to_json(const PlannedObstruction& plan) {
  Json j = to_json(plan.report);
  j["group"] = to_json(plan.group);
  Json table = Json::array();
  for (const auto& r : plan.endpoint) table.push_back(to_json(r));
  for (const auto& r : plan.table) table.push_back(to_json(r));
  j["implication_table"] = table;
  if (plan.proof_family) j["proof_family"] = to_string(*plan.proof_family);
  if (plan.suite) {
    j["certificate_suite"] = {{"label", plan.suite->label},
                              {"passed", plan.suite->passed()},
                              {"total", plan.suite->total()},
                              {"shapes", plan.suite->shapes}};
  }
  return j;
}

PositivityCertificate certificate_from_json(const Json& j, const Presentation& pres) {
  PositivityCertificate cert;
  cert.group = pres;
  cert.id = j.value("id", std::string());
  cert.target = wparse(j.at("target").get<std::string>());
  for (const auto& h : j.at("hypotheses")) {
    auto sign = h.at("sign").get<std::string>();
    if (sign != "+" && sign != "-") throw std::invalid_argument("hypothesis sign must be + or -");
    cert.hypotheses.push_back({wparse(h.at("word").get<std::string>()), sign == "+" ? 1 : -1});
  }
  for (const auto& f : j.at("factors")) {
    Factor fac;
    fac.word = wparse(f.at("word").get<std::string>());
    fac.repeat = f.value("repeat", 1);
    const auto& why = f.at("justification");
    auto kind = why.at("kind").get<std::string>();
    if (kind == "hypothesis") {
      fac.why.kind = Justification::Kind::Hypothesis;
    } else if (kind == "inverse-of-negative") {
      fac.why.kind = Justification::Kind::InverseOfNegative;
    } else if (kind == "sub-certificate") {
      fac.why.kind = Justification::Kind::SubCertificate;
    } else {
      throw std::invalid_argument("unknown justification kind '" + kind + "'");
    }
    fac.why.index = why.at("index").get<int>();
    cert.factors.push_back(fac);
  }
  if (j.contains("chain"))
    for (const auto& w : j.at("chain")) cert.chain.push_back(wparse(w.get<std::string>()));
  if (j.contains("subcertificates"))
    for (const auto& s : j.at("subcertificates")) cert.subs.push_back(certificate_from_json(s, pres));
  return cert;
}

}  // namespace lo
