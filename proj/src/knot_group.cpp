#include "lo/knot_group.hpp"

#include <numeric>
#include <stdexcept>

namespace lo {

std::int64_t KnotGroup::homology(const Word& w) const {
  return w.exp_sum(Gen::A) * q + w.exp_sum(Gen::B) * p;
}

KnotGroup torus_group(const TorusKnotSpec& spec) {
  const int p = spec.p, q = spec.q;
  if (p < 2 || q < 2) throw std::invalid_argument("torus knot needs p, q >= 2");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("torus knot needs coprime p, q");
  KnotGroup kg;
  kg.presentation = Presentation::torus_knot(p, q);
  kg.family = Family::Torus;
  kg.p = p;
  kg.q = q;
  for (int i = 1; i < p; ++i) {
    if ((static_cast<std::int64_t>(q) * i - 1) % p == 0) {
      kg.i = i;
      kg.j = static_cast<int>((1 - static_cast<std::int64_t>(q) * i) / p);
      break;
    }
  }
  auto& per = kg.peripheral;
  per.mu = Word::b(kg.j) * Word::a(kg.i);
  per.framing = static_cast<std::int64_t>(p) * q;
  per.s = Word::a(p);
  per.lambda = per.mu.pow(-per.framing) * per.s;
  kg.label = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return kg;
}

namespace {

Word twist_word(int k, int m) { return (Word::b(-k) * Word::a()).pow(m); }

}  // namespace

KnotGroup twisted_group(const TwistedSpec& spec) {
  const int k = spec.k, m = spec.m;
  if (k < 0 || m < 0) throw std::invalid_argument("twisted knot needs k, m >= 0");
  KnotGroup kg;
  kg.family = Family::Twisted;
  kg.k = k;
  kg.m = m;
  kg.p = 3;
  kg.q = 3 * k + 2;
  Word c = twist_word(k, m);
  Word lhs = Word::a(2) * c * Word::a();
  Word rhs = Word::b(2 * k + 1) * c * Word::b(k + 1);
  kg.presentation = Presentation::one_relator(lhs * rhs.inverse());
  auto& per = kg.peripheral;
  per.mu = Word::b(k + 1) * Word::a(-1);
  per.s = Word::a(2) * c * Word::a() * c;
  per.framing = 3 * (3 * static_cast<std::int64_t>(k) + 2) + 2 * static_cast<std::int64_t>(m);
  per.lambda = per.mu.pow(-per.framing) * per.s;
  kg.label = "T(3," + std::to_string(kg.q) + ")^" + std::to_string(m);
  return kg;
}

Word peripheral_word(const KnotGroup& kg, const Slope& slope) {
  if (std::gcd(slope.p, slope.q) != 1) throw std::invalid_argument("slope not primitive");
  if (slope.q < 0) throw std::invalid_argument("slope must have q >= 0");
  return kg.peripheral.mu.pow(slope.p) * kg.peripheral.lambda.pow(slope.q);
}

bool IdentityReport::all_equal() const {
  for (const auto& c : identities)
    if (c.verdict != Verdict::Equal) return false;
  return true;
}

bool IdentityReport::any_distinct() const {
  for (const auto& c : identities)
    if (c.verdict == Verdict::Distinct) return true;
  return false;
}

namespace {

IdentityCheck check(const std::string& name, const Word& lhs, const Word& rhs,
                    const Presentation& pres, const Budget& budget) {
  IdentityCheck c;
  c.name = name;
  c.lhs = lhs;
  c.rhs = rhs;
  auto v = equal_in_group(lhs, rhs, pres, budget);
  c.verdict = v.kind;
  c.method = v.method;
  c.nodes = v.nodes;
  if (v.equal() && v.has_derivation) {
    c.derivation_length = v.derivation.size();
    c.replayed = v.derivation.proves_equal(pres, lhs, rhs);
    if (!c.replayed) c.verdict = Verdict::Unknown;
  }
  return c;
}

}  // namespace

IdentityReport verify_presentation_identities(const KnotGroup& kg, const Budget& budget) {
  IdentityReport rep;
  rep.label = kg.label;
  const auto& pres = kg.presentation;
  const auto& per = kg.peripheral;
  Word s_framed = per.mu.pow(per.framing) * per.lambda;

  if (kg.family == Family::Torus) {
    const int p = kg.p, q = kg.q;
    rep.identities.push_back(check("mu = b^(q+j) a^(i-p)", per.mu,
                                   Word::b(q + kg.j) * Word::a(kg.i - p), pres, budget));
    rep.identities.push_back(check("s = a^p = b^q", per.s, Word::b(q), pres, budget));
    rep.identities.push_back(check("s = mu^f lambda", per.s, s_framed, pres, budget));
    rep.invariants.push_back({"p j + q i = 1", static_cast<std::int64_t>(p) * kg.j + static_cast<std::int64_t>(q) * kg.i == 1,
                              "i=" + std::to_string(kg.i) + " j=" + std::to_string(kg.j)});
    rep.invariants.push_back({"framing = pq", per.framing == static_cast<std::int64_t>(p) * q,
                              std::to_string(per.framing)});
  } else {
    const int k = kg.k, m = kg.m;
    Word c = twist_word(k, m);
    Word mu2 = c.inverse() * Word::b(-(2 * k + 1)) * Word::a(2) * c;
    Word s2 = Word::b(2 * k + 1) * c * Word::b(k + 1) * c;
    rep.identities.push_back(check("mu = b^(k+1) a^-1 = c^-1 b^-(2k+1) a^2 c", per.mu, mu2, pres, budget));
    rep.identities.push_back(check("s = a^2 c a c = b^(2k+1) c b^(k+1) c", per.s, s2, pres, budget));
    rep.identities.push_back(check("s = mu^f lambda", per.s, s_framed, pres, budget));
    rep.invariants.push_back({"framing = 3(3k+2)+2m",
                              per.framing == 3 * (3 * static_cast<std::int64_t>(k) + 2) + 2 * static_cast<std::int64_t>(m),
                              std::to_string(per.framing)});
    if (m == 0) {
      KnotGroup t = torus_group({3, 3 * k + 2});
      rep.invariants.push_back({"m=0 relator is a^3 b^-(3k+2)", kg.relator() == t.relator(), kg.relator().str()});
      rep.invariants.push_back({"m=0 mu is the torus alternative meridian b^(q+j) a^(i-p)",
                                per.mu == Word::b(t.q + t.j) * Word::a(t.i - t.p), per.mu.str()});
      rep.identities.push_back(check("m=0: mu = torus mu", per.mu, t.peripheral.mu, t.presentation, budget));
      rep.identities.push_back(check("m=0: s = torus s", per.s, t.peripheral.s, t.presentation, budget));
      rep.identities.push_back(check("m=0: lambda = torus lambda", per.lambda, t.peripheral.lambda,
                                     t.presentation, budget));
    }
  }
  rep.invariants.push_back({"relator abelianizes to zero", kg.homology(kg.relator()) == 0,
                            std::to_string(kg.homology(kg.relator()))});
  rep.invariants.push_back({"mu generates H1", kg.homology(per.mu) == 1, std::to_string(kg.homology(per.mu))});
  // the twisted framing 3(3k+2)+2m leaves lambda with image 2m
  rep.invariants.push_back({"lambda is null-homologous", kg.homology(per.lambda) == 0,
                            "image of lambda in H1 is " + std::to_string(kg.homology(per.lambda)),
                            kg.family == Family::Twisted});
  return rep;
}

}  // namespace lo
