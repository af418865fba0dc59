#include "lo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lo/ball.hpp"
#include "lo/cone_search.hpp"
#include "lo/families.hpp"
#include "lo/json_io.hpp"
#include "lo/planner.hpp"

namespace lo {

// ---- expressions ----

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const KnotGroup* kg) : s_(text), kg_(kg) {}

  Word parse() {
    Word w = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return w;
  }

 private:
  const std::string& s_;
  const KnotGroup* kg_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& m) const {
    throw std::invalid_argument("expression '" + s_ + "': " + m + " at position " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Word expr() {
    Word w = power();
    for (;;) {
      skip();
      if (eat('*')) {
        w *= power();
      } else if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(' || s_[i_] == '1')) {
        w *= power();  // juxtaposition
      } else {
        return w;
      }
    }
  }

  Word power() {
    Word base = atom();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    if (eat('(')) {
      skip();
      if (eat('-')) neg = !neg;
      auto e = integer();
      if (!eat(')')) fail("expected ')'");
      return base.pow(neg ? -e : e);
    }
    auto e = integer();
    return base.pow(neg ? -e : e);
  }

  std::int64_t integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer exponent");
    return std::stoll(s_.substr(start, i_ - start));
  }

  const KnotGroup& group(const std::string& sym) const {
    if (!kg_) throw std::invalid_argument("'" + sym + "' needs a knot group (use --group)");
    return *kg_;
  }

  Word atom() {
    skip();
    if (eat('(')) {
      Word w = expr();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    if (eat('1')) return {};
    std::size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a symbol");
    std::string id = s_.substr(start, i_ - start);
    if (id == "mu") return group(id).peripheral.mu;
    if (id == "lambda") return group(id).peripheral.lambda;
    if (id == "s") return group(id).peripheral.s;
    if (id.find_first_not_of("abAB") == std::string::npos) return Word::parse(id);
    i_ = start;
    fail("unknown symbol '" + id + "'");
  }
};

}  // namespace

Word parse_expression(const std::string& text, const KnotGroup* kg) { return ExprParser(text, kg).parse(); }

std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  auto to_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer range '" + text + "'");
    }
    if (used != t.size()) throw std::invalid_argument("bad integer range '" + text + "'");
    return v;
  };
  while (std::getline(ss, part, ',')) {
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
    } else {
      int lo = to_int(part.substr(0, dots)), hi = to_int(part.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("empty integer range '" + text + "'");
      for (int x = lo; x <= hi; ++x) out.push_back(x);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer range '" + text + "'");
  return out;
}

// ---- commands ----

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<int> radius;
  int insertions = Budget{}.max_insertions;
  int length_factor = Budget{}.length_factor;
  int quotient_degree = Budget{}.quotient_degree;
  unsigned seed = 1;
  std::string format = "text";
  std::string out_path;

  Budget budget() const {
    Budget b;
    b.max_insertions = insertions;
    b.length_factor = length_factor;
    b.quotient_degree = quotient_degree;
    return b;
  }
  Json config() const {
    Json j;
    if (radius) j["radius"] = *radius;
    j["budget_insertions"] = insertions;
    j["budget_length_factor"] = length_factor;
    j["quotient_degree"] = quotient_degree;
    j["seed"] = seed;
    return j;
  }
};

struct KnotArgs {
  std::string kind;
  std::vector<int> params;
  std::optional<int> k, m;
};

// torus p q | twisted m k | pretzel m | twisted1 k
KnotRequest knot_request(const KnotArgs& a) {
  KnotRequest r;
  auto need = [&](std::size_t n, const std::string& form) {
    if (a.params.size() != n) throw UsageError("expected '" + form + "'");
  };
  if (a.kind == "torus") {
    need(2, "torus <p> <q>");
    r.family = Family::Torus;
    r.p = a.params[0];
    r.q = a.params[1];
    return r;
  }
  r.family = Family::Twisted;
  if (a.kind == "twisted") {
    if (a.params.size() == 2) {
      r.m = a.params[0];
      r.k = a.params[1];
    } else if (!(a.params.empty() && a.k && a.m)) {
      throw UsageError("expected 'twisted <m> <k>' or 'twisted --k K --m M'");
    }
  } else if (a.kind == "pretzel") {
    need(1, "pretzel <m>");
    r.k = 1;
    r.m = a.params[0];
  } else if (a.kind == "twisted1") {
    need(1, "twisted1 <k>");
    r.m = 1;
    r.k = a.params[0];
  } else {
    throw UsageError("unknown knot kind '" + a.kind + "' (expected torus, twisted, pretzel or twisted1)");
  }
  if (a.k) r.k = *a.k;
  if (a.m) r.m = *a.m;
  return r;
}

KnotGroup make_group(const KnotRequest& r) {
  return r.family == Family::Torus ? torus_group({r.p, r.q}) : twisted_group({r.k, r.m});
}

// torus:p:q | twisted:m:k | pretzel:m | twisted1:k
KnotGroup group_from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string p;
  while (std::getline(ss, p, ':')) parts.push_back(p);
  if (parts.empty()) throw UsageError("empty group spec");
  KnotArgs a;
  a.kind = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    try {
      a.params.push_back(std::stoi(parts[i]));
    } catch (const std::exception&) {
      throw UsageError("bad group spec '" + spec + "'");
    }
  }
  return make_group(knot_request(a));
}

struct Output {
  const Globals& g;
  std::ostream& out;

  void emit(const Json& doc, const std::string& text) const {
    std::string body = g.format == "json" ? doc.dump(2) + "\n" : text;
    if (g.out_path.empty()) {
      out << body;
      return;
    }
    std::ofstream f(g.out_path);
    if (!f) throw std::runtime_error("cannot write " + g.out_path);
    f << body;
    out << "wrote " << g.out_path << "\n";
  }
};

std::string wstr(const Word& w) { return w.empty() ? "1" : w.str(); }

int cmd_group(const Globals& g, const KnotArgs& a, std::ostream& out) {
  KnotGroup kg = make_group(knot_request(a));
  auto rep = verify_presentation_identities(kg, g.budget());
  Json doc = with_schema("group", Json{{"group", to_json(kg)}, {"identities", to_json(rep)}});
  std::ostringstream t;
  t << kg.label << "\n";
  t << "  relator  " << wstr(kg.relator()) << "\n";
  t << "  mu       " << wstr(kg.peripheral.mu) << "\n";
  t << "  lambda   " << wstr(kg.peripheral.lambda) << "\n";
  t << "  s        " << wstr(kg.peripheral.s) << "\n";
  t << "  framing  " << kg.peripheral.framing << "\n";
  for (const auto& c : rep.identities)
    t << "  " << to_string(c.verdict) << "  " << c.name << "  [" << c.method << ", " << c.derivation_length
      << " steps]\n";
  for (const auto& c : rep.invariants)
    t << "  " << (c.holds ? "holds" : c.informational ? "note " : "FAILS") << "  " << c.name
      << (c.holds ? "" : " (" + c.detail + ")") << "\n";
  Output{g, out}.emit(doc, t.str());
  if (rep.any_distinct()) return kExitVerification;
  for (const auto& c : rep.invariants)
    if (!c.holds && !c.informational) return kExitVerification;
  return rep.all_equal() ? kExitOk : kExitInconclusive;
}

int cmd_obstruct(const Globals& g, const KnotArgs& a, const std::string& N_text, const std::string& family_N_text,
                 std::optional<int> min_radius, std::ostream& out) {
  KnotRequest req = knot_request(a);
  PlannerConfig cfg;
  cfg.budget = g.budget();
  if (g.radius) cfg.radius = cfg.twisted_radius = *g.radius;
  if (min_radius) cfg.min_radius = *min_radius;
  if (!N_text.empty()) cfg.cone_N = cfg.twisted_cone_N = parse_int_range(N_text);
  if (!family_N_text.empty()) cfg.family_N = parse_int_range(family_N_text);
  for (int N : cfg.cone_N)
    if (N < 1) throw UsageError("--N values must be positive");
  for (int N : cfg.family_N)
    if (N < 1) throw UsageError("--family-N values must be positive");
  auto plan = plan_obstruction(req, cfg);
  Json body = to_json(plan);
  body["config"] = g.config();
  Json doc = with_schema("obstruction", body);
  std::ostringstream t;
  t << plan.report.knot << "\n";
  t << "obstructed:";
  if (plan.report.merged.empty()) t << " (nothing certified)";
  for (const auto& c : plan.report.merged) t << " " << c.str();
  t << "\ncomponents:\n";
  for (const auto& c : plan.report.components) {
    t << "  " << c.str() << "  " << c.provenance << "  [";
    for (std::size_t i = 0; i < c.evidence.size(); ++i) t << (i ? ", " : "") << c.evidence[i];
    t << "]\n";
  }
  t << "evidence:\n";
  for (const auto& e : plan.report.evidence)
    t << "  " << (e.certified ? "certified  " : "uncertified") << "  " << e.id << "  " << e.detail << "\n";
  if (!plan.report.caveats.empty()) {
    t << "caveats:\n";
    for (const auto& c : plan.report.caveats) t << "  - " << c << "\n";
  }
  Output{g, out}.emit(doc, t.str());
  if (plan.suite && !plan.suite->all_ok()) return kExitVerification;
  return plan.report.merged.empty() ? kExitInconclusive : kExitOk;
}

std::optional<ProofFamily> family_of_id(const std::string& id) {
  if (id.rfind("torus-", 0) == 0 || id.rfind("torus-split-", 0) == 0) return ProofFamily::Torus;
  if (id.rfind("pretzel-", 0) == 0) return ProofFamily::Pretzel;
  if (id.rfind("twisted1-", 0) == 0) return ProofFamily::Twisted1;
  return std::nullopt;
}

struct CertifyArgs {
  std::string id;
  bool all = false;
  std::string family;
  std::optional<int> p, q;
  std::string m, k, n, N;
};

int cmd_certify(const Globals& g, const CertifyArgs& c, std::ostream& out) {
  std::vector<ProofFamily> families;
  if (!c.family.empty()) {
    try {
      families.push_back(parse_family(c.family));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!c.id.empty()) {
    auto ids = known_identity_ids();
    if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) throw UsageError("unknown identity id '" + c.id + "'");
    if (families.empty()) {
      auto f = family_of_id(c.id);
      if (!f) throw UsageError("identity '" + c.id + "' needs --family");
      families.push_back(*f);
    }
  } else if (c.all) {
    if (families.empty()) families = {ProofFamily::Torus, ProofFamily::Pretzel, ProofFamily::Twisted1};
  } else if (families.empty()) {
    throw UsageError("certify needs an identity id, --family or --all");
  }
  std::vector<CertificateSuite> suites;
  for (auto f : families) {
    std::vector<FamilyParams> grid;
    std::vector<int> n_range{1}, N_range;
    if (f == ProofFamily::Torus) {
      FamilyParams fp;
      fp.p = c.p.value_or(2);
      fp.q = c.q.value_or(3);
      torus_group({fp.p, fp.q});  // validates
      grid.push_back(fp);
      n_range = c.n.empty() ? int_range(1, 3) : parse_int_range(c.n);
      N_range = c.N.empty() ? int_range(1, 3) : parse_int_range(c.N);
    } else if (f == ProofFamily::Pretzel) {
      for (int m : c.m.empty() ? int_range(0, 4) : parse_int_range(c.m)) {
        if (m < 0) throw UsageError("m must be non-negative");
        FamilyParams fp;
        fp.m = m;
        grid.push_back(fp);
      }
      N_range = c.N.empty() ? int_range(1, 4) : parse_int_range(c.N);
    } else {
      for (int k : c.k.empty() ? int_range(0, 4) : parse_int_range(c.k)) {
        if (k < 0) throw UsageError("k must be non-negative");
        FamilyParams fp;
        fp.k = k;
        grid.push_back(fp);
      }
      N_range = c.N.empty() ? int_range(1, 4) : parse_int_range(c.N);
    }
    for (int N : N_range)
      if (N < 1) throw UsageError("N values must be positive");
    for (int n : n_range)
      if (n < 1) throw UsageError("n values must be positive");
    for (const auto& fp : grid) {
      if (c.id.empty()) {
        suites.push_back(certify_family_identities(f, fp, n_range, N_range, g.budget()));
      } else {
        try {
          suites.push_back(certify_identity(c.id, f, fp, n_range, N_range, g.budget()));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
    }
  }
  std::size_t passed = 0, total = 0;
  Json arr = Json::array();
  std::ostringstream t;
  for (const auto& s : suites) {
    passed += s.passed();
    total += s.total();
    arr.push_back(to_json(s));
    t << s.label << ": " << s.passed() << "/" << s.total() << (s.all_ok() ? " pass" : " FAIL") << "\n";
    for (const auto& x : s.certificates)
      if (!x.report.ok) t << "  FAIL certificate " << x.id << " " << x.params << ": " << x.report.failure << "\n";
    for (const auto& x : s.identities)
      if (x.verdict != Verdict::Equal)
        t << "  FAIL identity " << x.id << " " << x.params << ": " << to_string(x.verdict) << "\n";
    for (const auto& x : s.trees)
      if (!(x.result.ok && x.checked)) t << "  FAIL case tree " << x.id << " " << x.params << ": " << x.error << "\n";
  }
  t << "total: " << passed << "/" << total << (passed == total ? " pass" : " FAIL") << "\n";
  Json doc = with_schema("certificate-suite", Json{{"identity", c.id.empty() ? Json(nullptr) : Json(c.id)},
                                                   {"passed", passed},
                                                   {"total", total},
                                                   {"suites", arr},
                                                   {"config", g.config()}});
  Output{g, out}.emit(doc, t.str());
  return passed == total ? kExitOk : kExitVerification;
}

struct ConeArgs {
  std::string group;
  bool free = false;
  std::string relator;
  std::vector<std::string> pos, neg;
  std::size_t max_decisions = SearchOptions{}.max_decisions;
};

void print_steps(std::ostream& t, const Ball& ball, const std::vector<TraceStep>& steps, const std::string& indent) {
  for (const auto& s : steps) {
    t << indent << s.kind;
    for (int e : s.elems) t << " " << wstr(ball.elements[static_cast<std::size_t>(e)]);
    if (s.kind == "hypothesis") t << "  (" << s.operands[0] << " " << s.operands[1] << ")";
    t << "\n";
    for (const auto& c : s.cases) {
      t << indent << "  case " << (c.sign > 0 ? "+" : "-") << ":\n";
      print_steps(t, ball, c.steps, indent + "    ");
    }
  }
}

int cmd_cone(const Globals& g, const ConeArgs& c, std::ostream& out) {
  int sources = (!c.group.empty()) + c.free + (!c.relator.empty());
  if (sources != 1) throw UsageError("cone needs exactly one of --group, --free, --relator");
  if (c.pos.empty() && c.neg.empty()) throw UsageError("cone needs at least one --pos or --neg hypothesis");
  std::optional<KnotGroup> kg;
  Presentation pres;
  std::string label;
  if (!c.group.empty()) {
    kg = group_from_spec(c.group);
    pres = kg->presentation;
    label = kg->label;
  } else if (!c.relator.empty()) {
    pres = Presentation::one_relator(Word::parse(c.relator));
    label = "<a, b | " + c.relator + ">";
  } else {
    label = "free group F(a, b)";
  }
  std::vector<Hypothesis> hyps;
  const KnotGroup* kp = kg ? &*kg : nullptr;
  for (const auto& e : c.pos) hyps.push_back({parse_expression(e, kp), 1});
  for (const auto& e : c.neg) hyps.push_back({parse_expression(e, kp), -1});
  const int radius = g.radius.value_or(6);
  if (radius < 1) throw UsageError("--radius must be at least 1");
  BallBudget bb;
  bb.equality = g.budget();
  std::vector<Word> extra;
  for (const auto& h : hyps) extra.push_back(h.word);
  Ball ball = build_ball(pres, radius, bb, extra);
  SearchOptions so;
  so.max_decisions = c.max_decisions;
  SearchResult res = cone_consistency(ball, hyps, so);
  Json body = to_json(ball, hyps, res);
  body["group"] = label;
  body["config"] = g.config();
  Json doc = with_schema("cone-search", body);
  std::ostringstream t;
  t << label << ", ball radius " << radius << ": " << ball.size() << " elements, " << ball.products.size()
    << " products, " << (ball.exact ? "exact" : "inexact") << "\n";
  for (const auto& h : hyps) t << "  hypothesis " << wstr(h.word) << (h.sign > 0 ? " > 1" : " < 1") << "\n";
  t << to_string(res.status);
  if (res.degenerate) t << " (degenerate hypothesis)";
  if (!res.reason.empty()) t << ": " << res.reason;
  t << "\n";
  if (res.status == SearchStatus::Unsat) {
    t << "trace (" << trace_size(res.trace) << " steps):\n";
    print_steps(t, ball, res.trace, "  ");
  } else if (res.status == SearchStatus::Sat) {
    std::size_t npos = 0;
    for (std::size_t e = 1; e < ball.size(); ++e) npos += res.signs[e] > 0;
    t << "consistent assignment with " << npos << " positive elements (truncated; not a left-ordering)\n";
  }
  Output{g, out}.emit(doc, t.str());
  switch (res.status) {
    case SearchStatus::Unsat: return kExitOk;
    case SearchStatus::Sat: return kExitSat;
    case SearchStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Left-orderability obstructions for Dehn surgery on (twisted) torus knots", "lo_obstruct"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--radius", g.radius, "ball radius for cone searches")->check(CLI::PositiveNumber);
  app.add_option("--budget-insertions", g.insertions, "relator insertions per equality search")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget-length-factor", g.length_factor, "intermediate length cap as a multiple of input length")
      ->check(CLI::PositiveNumber);
  app.add_option("--quotient-degree", g.quotient_degree, "largest permutation degree for separating quotients")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "random seed (recorded in reports)");
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out_path, "write the report to this path");

  auto add_knot = [](CLI::App* sub, KnotArgs& a) {
    sub->add_option("kind", a.kind, "torus | twisted | pretzel | twisted1")->required();
    sub->add_option("params", a.params, "torus <p> <q>, twisted <m> <k>, pretzel <m>, twisted1 <k>");
    sub->add_option("--k", a.k, "twisted: k (q = 3k+2)")->check(CLI::NonNegativeNumber);
    sub->add_option("--m", a.m, "twisted: full twists m")->check(CLI::NonNegativeNumber);
  };

  KnotArgs group_args;
  auto* group = app.add_subcommand("group", "build a knot group and verify its peripheral identities");
  add_knot(group, group_args);

  KnotArgs obs_args;
  std::string obs_N, obs_family_N;
  std::optional<int> obs_min_radius;
  auto* obstruct = app.add_subcommand("obstruct", "assemble the obstructed slope set");
  add_knot(obstruct, obs_args);
  obstruct->add_option("--N", obs_N, "implication-table N values, e.g. 1..5");
  obstruct->add_option("--family-N", obs_family_N, "N values for certificate families, e.g. 1..4");
  obstruct->add_option("--min-radius", obs_min_radius, "smallest radius tried (radii are scanned upward)")
      ->check(CLI::PositiveNumber);

  CertifyArgs cert_args;
  auto* certify = app.add_subcommand("certify", "verify certificate families");
  certify->add_option("id", cert_args.id, "identity id (see --list)");
  certify->add_flag("--all", cert_args.all, "every family");
  certify->add_option("--family", cert_args.family, "torus | pretzel | twisted1");
  certify->add_option("--p", cert_args.p, "torus p");
  certify->add_option("--q", cert_args.q, "torus q");
  certify->add_option("--m", cert_args.m, "pretzel m range, e.g. 0..4");
  certify->add_option("--k", cert_args.k, "twisted1 k range, e.g. 0..4");
  certify->add_option("--n", cert_args.n, "torus n range");
  certify->add_option("--N", cert_args.N, "N range");
  bool list_ids = false;
  certify->add_flag("--list", list_ids, "print the known identity ids");

  ConeArgs cone_args;
  auto* cone = app.add_subcommand("cone", "truncated positive-cone consistency search");
  cone->add_option("--group", cone_args.group, "torus:p:q | twisted:m:k | pretzel:m | twisted1:k");
  cone->add_flag("--free", cone_args.free, "free group on a, b");
  cone->add_option("--relator", cone_args.relator, "single relator word over a, b");
  cone->add_option("--pos", cone_args.pos, "expression required positive")->allow_extra_args(false);
  cone->add_option("--neg", cone_args.neg, "expression required negative")->allow_extra_args(false);
  cone->add_option("--max-decisions", cone_args.max_decisions, "search budget")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (group->parsed()) return cmd_group(g, group_args, out);
    if (obstruct->parsed()) return cmd_obstruct(g, obs_args, obs_N, obs_family_N, obs_min_radius, out);
    if (certify->parsed()) {
      if (list_ids) {
        for (const auto& id : known_identity_ids()) out << id << "\n";
        return kExitOk;
      }
      return cmd_certify(g, cert_args, out);
    }
    if (cone->parsed()) return cmd_cone(g, cone_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}

}  // namespace lo
