#include "lo/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace lo {

const char* to_string(ProofFamily f) {
  switch (f) {
    case ProofFamily::Torus: return "torus";
    case ProofFamily::Pretzel: return "pretzel";
    case ProofFamily::Twisted1: return "twisted1";
  }
  return "?";
}

ProofFamily parse_family(const std::string& s) {
  if (s == "torus") return ProofFamily::Torus;
  if (s == "pretzel") return ProofFamily::Pretzel;
  if (s == "twisted1") return ProofFamily::Twisted1;
  throw std::invalid_argument("unknown family '" + s + "' (expected torus, pretzel or twisted1)");
}

KnotGroup family_group(ProofFamily f, const FamilyParams& params) {
  switch (f) {
    case ProofFamily::Torus: return torus_group({params.p, params.q});
    case ProofFamily::Pretzel: return twisted_group({1, params.m});
    case ProofFamily::Twisted1: return twisted_group({params.k, 1});
  }
  throw std::logic_error("bad family");
}

std::string family_label(ProofFamily f, const FamilyParams& params) {
  switch (f) {
    case ProofFamily::Torus: return "torus p=" + std::to_string(params.p) + " q=" + std::to_string(params.q);
    case ProofFamily::Pretzel: return "pretzel m=" + std::to_string(params.m);
    case ProofFamily::Twisted1: return "twisted1 k=" + std::to_string(params.k);
  }
  return "?";
}

std::size_t CertificateSuite::passed() const {
  std::size_t n = 0;
  for (const auto& c : certificates) n += c.report.ok;
  for (const auto& i : identities) n += i.verdict == Verdict::Equal;
  for (const auto& t : trees) n += t.result.ok && t.checked;
  return n;
}

std::vector<int> int_range(int lo, int hi) {
  std::vector<int> out;
  for (int x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

namespace {

Word A(std::int64_t e = 1) { return Word::a(e); }
Word B(std::int64_t e = 1) { return Word::b(e); }

std::int64_t floor_mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

Hypothesis pos(const Word& w) { return {w, 1}; }
Hypothesis neg(const Word& w) { return {w, -1}; }

struct FamilyCase {
  std::string id;
  CertificateHint hint;
  std::vector<Hypothesis> hyps;
  std::string shape;
};

struct FamilyIdentity {
  std::string id;
  Word lhs, rhs;
  std::vector<Word> chain;
};

// Peripheral words of the twisted group (k, m) in both printed forms.
struct Twisted {
  int k, m;
  Word c, mu1, mu1i, mu2, s1, s2;
  Twisted(int k_, int m_) : k(k_), m(m_) {
    c = (B(-k) * A()).pow(m);
    mu1 = B(k + 1) * A(-1);
    mu1i = mu1.inverse();
    mu2 = c.inverse() * B(-(2 * k + 1)) * A(2) * c;
    s1 = A(2) * c * A() * c;
    s2 = B(2 * k + 1) * c * B(k + 1) * c;
  }
  Word target(int N) const { return mu1.pow(N) * s1; }
  // mu1^N s1 -> s1 mu2^N: each link trades mu1 s1 for s2 mu2 and then s2 for s1.
  std::vector<Word> commute(int N) const {
    std::vector<Word> out;
    for (int j = N - 1; j >= 0; --j) out.push_back(mu1.pow(j) * s1 * mu2.pow(N - j));
    return out;
  }
  // ... and on to s1 mu1^N.
  std::vector<Word> commute_to_mu1(int N) const {
    auto out = commute(N);
    for (int j = 1; j <= N; ++j) out.push_back(s1 * mu1.pow(j) * mu2.pow(N - j));
    return out;
  }
};

FamilyCase mu_positive(const Twisted& t, int N) {
  FamilyCase fc;
  fc.id = "mu-positive";
  fc.hint = {"mu positive: mu^N s", t.target(N), {atom(t.mu1, N), atom(t.s1)}, {}};
  fc.hyps = {pos(t.s1), pos(t.mu1)};
  fc.shape = "mu^N s = (mu)^N (s)";
  return fc;
}

std::vector<FamilyCase> pretzel_cases(int m, int N) {
  Twisted t(1, m);
  const Word w = B(-1) * A();
  const Word wi = w.inverse();
  const Word wm = w.pow(m);
  const Word T = t.target(N);
  std::vector<FamilyCase> out;
  out.push_back(mu_positive(t, N));

  // 1 > w and a > 1, so b = a w^-1 > 1
  HintFactor bc = composite(B(), {atom(A()), atom(wi)});
  HintFactor a_inv_b2 = composite(A(-1) * B(2), {atom(wi), bc});
  HintFactor mui_b = composite(t.mu1i * B(), {atom(t.mu1i), bc});
  {
    FamilyCase fc;
    fc.id = "pretzel-case1";
    std::vector<HintFactor> fs;
    HintFactor b2 = bc;
    b2.repeat = 2;
    if (m >= 1) {
      fs = {b2, a_inv_b2, mui_b, atom(A()), bc, mui_b, atom(A())};
      fs[1].repeat = N;
      fs[2].repeat = m - 1;
      fs[5].repeat = m - 1;
      fc.shape = "mu^N s = b^2 (a^-1 b^2)^N (mu^-1 b)^(m-1) a b (mu^-1 b)^(m-1) a";
    } else {
      HintFactor b3 = bc;
      b3.repeat = 3;
      fs = {b2, a_inv_b2, b3};
      fs[1].repeat = N;
      fc.shape = "mu^N s = b^2 (a^-1 b^2)^N b^3";
    }
    fc.hint = {"pretzel case 1 (b > a > 1)", T, fs, {t.mu1.pow(N) * t.s2}};
    fc.hyps = {pos(t.s1), neg(t.mu1), neg(w), pos(A())};
    out.push_back(fc);
  }
  {
    FamilyCase fc;
    fc.id = "pretzel-case1-contradiction";
    fc.hint = {"pretzel case 1: s = a (a w^m)^2 with a, w negative",
               t.s1.inverse(),
               {atom(wi, m), atom(A(-1)), atom(wi, m), atom(A(-1), 2)},
               {}};
    fc.hyps = {pos(t.s1), neg(w), neg(A())};
    fc.shape = "s^-1 = (w^-1)^m a^-1 (w^-1)^m a^-2";
    out.push_back(fc);
  }
  HintFactor mui_w = composite(t.mu1i * w, {atom(t.mu1i), atom(w)}, N);
  {
    FamilyCase fc;
    fc.id = "pretzel-case2";
    fc.hint = {"pretzel case 2 (w > 1, a > 1)",
               T,
               {atom(A(), 2), atom(w, m), mui_w, atom(A()), atom(w, m)},
               t.commute(N)};
    fc.hyps = {pos(t.s1), neg(t.mu1), pos(w), pos(A())};
    fc.shape = "mu^N s = a^2 w^m (mu^-1 w)^N a w^m";
    out.push_back(fc);
  }
  {
    FamilyCase fc;
    fc.id = "pretzel-b-negative";
    fc.hint = {"w > 1 > a forces 1 > b", B(-1), {atom(w), atom(A(-1))}, {}};
    fc.hyps = {pos(w), neg(A()), pos(B())};
    fc.shape = "b^-1 = w a^-1";
    out.push_back(fc);
  }
  if (m >= 1) {
    const Word ab = A() * B(-1), a2b2 = A(2) * B(-2), a2wm = A(2) * wm, awm = A() * wm;
    {
      FamilyCase fc;
      fc.id = "pretzel-aux-ab";
      fc.hint = {"1 > a b^-1 makes s negative",
                 t.s1.inverse(),
                 {atom(A(-1)), atom(ab.inverse(), m - 1), atom(B(-1)), atom(A(-1)), atom(ab.inverse(), m - 1),
                  atom(B(-1), 2)},
                 {t.s2.inverse()}};
      fc.hyps = {pos(t.s1), neg(A()), neg(B()), neg(ab)};
      fc.shape = "s^-1 = a^-1 (b a^-1)^(m-1) b^-1 a^-1 (b a^-1)^(m-1) b^-2";
      out.push_back(fc);
    }
    {
      FamilyCase fc;
      fc.id = "pretzel-aux-a2b2";
      HintFactor y = composite(B(2) * A(-1) * B(-1), {atom(a2b2.inverse()), atom(ab)}, m - 1);
      fc.hint = {"1 > a^2 b^-2 makes s negative",
                 t.s1.inverse(),
                 {atom(A(-1)), atom(B(-1)), y, atom(A(-1)), atom(B(-1)), y, atom(B(-1))},
                 {t.s2.inverse()}};
      fc.hyps = {pos(t.s1), neg(A()), neg(B()), pos(ab), neg(a2b2)};
      fc.shape = "s^-1 = a^-1 b^-1 ((b^2 a^-2)(a b^-1))^(m-1) a^-1 b^-1 ((b^2 a^-2)(a b^-1))^(m-1) b^-1";
      out.push_back(fc);
    }
    {
      FamilyCase fc;
      fc.id = "pretzel-aux-a2wm";
      HintFactor z = composite(wm.inverse() * B(-2), {atom(a2wm.inverse()), atom(a2b2)}, 2);
      fc.hint = {"1 > a^2 w^m makes s = b (b^2 w^m)^2 negative", t.s1.inverse(), {z, atom(B(-1))}, {t.s2.inverse()}};
      fc.hyps = {pos(t.s1), neg(B()), pos(a2b2), neg(a2wm)};
      fc.shape = "s^-1 = ((a^2 w^m)^-1 (a^2 b^-2))^2 b^-1";
      out.push_back(fc);
    }
    {
      FamilyCase fc;
      fc.id = "pretzel-aux-awm";
      fc.hint = {"1 > a w^m makes s = a (a w^m)^2 negative", t.s1.inverse(),
                 {atom(awm.inverse(), 2), atom(A(-1))}, {}};
      fc.hyps = {pos(t.s1), neg(A()), neg(awm)};
      fc.shape = "s^-1 = ((a w^m)^-1)^2 a^-1";
      out.push_back(fc);
    }
    {
      FamilyCase fc;
      fc.id = "pretzel-case2-aux";
      fc.hint = {"pretzel case 2 (1 > a > b)", T, {atom(a2wm), mui_w, atom(awm)}, t.commute(N)};
      fc.hyps = {pos(t.s1), neg(t.mu1), pos(w), neg(A()), pos(a2wm), pos(awm)};
      fc.shape = "mu^N s = (a^2 w^m) (mu^-1 w)^N (a w^m)";
      out.push_back(fc);
    }
  }
  return out;
}

std::vector<FamilyCase> twisted1_cases(int k, int N) {
  Twisted t(k, 1);
  const Word T = t.target(N);
  const Word w1 = B(2 * k + 2) * A(-2), w2 = A(2) * B(-(2 * k + 1));
  std::vector<FamilyCase> out;
  out.push_back(mu_positive(t, N));
  {
    FamilyCase fc;
    fc.id = "twisted1-both-negative";
    fc.hint = {"1 > a, 1 > b: s = b^(k+1) a b a", t.s1.inverse(),
               {atom(A(-1)), atom(B(-1)), atom(A(-1)), atom(B(-1), k + 1)}, {t.s2.inverse()}};
    fc.hyps = {pos(t.s1), neg(A()), neg(B())};
    fc.shape = "s^-1 = a^-1 b^-1 a^-1 b^-(k+1)";
    out.push_back(fc);
  }
  {
    FamilyCase fc;
    fc.id = "twisted1-b-positive-a-negative";
    HintFactor ci = composite(A(-1) * B(k), {atom(A(-1)), atom(B(), k)});
    fc.hint = {"b > 1 > a: s = a^2 (b^-k a) a (b^-k a) negative", t.s1.inverse(),
               {ci, atom(A(-1)), ci, atom(A(-1), 2)}, {}};
    fc.hyps = {pos(t.s1), neg(A()), pos(B())};
    fc.shape = "s^-1 = (a^-1 b^k) a^-1 (a^-1 b^k) a^-2";
    out.push_back(fc);
  }
  {
    FamilyCase fc;
    fc.id = "twisted1-a-positive-b-negative";
    HintFactor blk = composite(B(-(2 * k + 1)) * A(2), {atom(B(-1), 2 * k + 1), atom(A(), 2)}, N);
    fc.hint = {"a > 1 > b",
               T,
               {atom(A(), 2), atom(B(-1), k), atom(A(), 2), blk, atom(B(-1), k), atom(A())},
               t.commute(N)};
    fc.hyps = {pos(t.s1), pos(A()), neg(B())};
    fc.shape = "mu^N s = a^2 (b^-k a) a (b^-(2k+1) a^2)^N (b^-k a)";
    out.push_back(fc);
  }
  HintFactor muiba = composite(t.mu1i * B() * A(), {atom(t.mu1i), atom(B()), atom(A())}, 2);
  {
    FamilyCase fc;
    fc.id = "twisted1-case1";
    HintFactor ab = composite(A(-1) * B(k + 1), {atom(A(-1) * B()), atom(B(), k)}, N - 1);
    fc.hint = {"case 1 (b > a > 1)", T, {atom(B(), k + 1), ab, muiba}, {}};
    fc.hyps = {pos(t.s1), pos(A()), pos(B()), neg(t.mu1), pos(A(-1) * B())};
    fc.shape = "mu^N s = b^(k+1) (a^-1 b^(k+1))^(N-1) (mu^-1 b a)^2";
    out.push_back(fc);
  }
  {
    FamilyCase fc;
    fc.id = "twisted1-subcase1";
    HintFactor wm = composite(w1 * t.mu1i, {atom(w1), atom(t.mu1i)}, N);
    fc.hint = {"subcase I (w = b^(2k+2) a^-2 > 1)",
               T,
               {atom(A()), atom(t.mu1i), atom(B()), atom(A()), atom(t.mu1i), atom(B()), atom(t.mu1i), wm,
                atom(B(), k + 1)},
               t.commute_to_mu1(N)};
    fc.hyps = {pos(t.s1), pos(A()), pos(B()), neg(t.mu1), neg(A(-1) * B()), pos(w1)};
    fc.shape = "mu^N s = a mu^-1 b a mu^-1 b mu^-1 (w mu^-1)^N b^(k+1)";
    out.push_back(fc);
  }
  {
    FamilyCase fc;
    fc.id = "twisted1-subcase2";
    fc.hint = {"subcase II (w = a^2 b^-(2k+1) > 1)",
               T,
               {atom(A()), atom(t.mu1i), atom(B()), atom(w2, N), atom(A()), atom(t.mu1i), atom(B()), atom(A())},
               t.commute(N)};
    fc.hyps = {pos(t.s1), pos(A()), pos(B()), neg(t.mu1), neg(A(-1) * B()), neg(w1), pos(w2)};
    fc.shape = "mu^N s = a mu^-1 b w^N a mu^-1 b a";
    out.push_back(fc);
  }
  {
    FamilyCase fc;
    fc.id = "twisted1-case2-split";
    fc.hint = {"(b^(2k+2) a^-2)(a^2 b^-(2k+1)) = b", B(-1), {atom(w2.inverse()), atom(w1.inverse())}, {}};
    fc.hyps = {pos(B()), neg(w1), neg(w2)};
    fc.shape = "b^-1 = (a^2 b^-(2k+1))^-1 (b^(2k+2) a^-2)^-1";
    out.push_back(fc);
  }
  return out;
}

struct TorusData {
  int p, q, i, j;
  Word mu, mu_alt, s;
  explicit TorusData(const KnotGroup& kg) : p(kg.p), q(kg.q), i(kg.i), j(kg.j) {
    mu = kg.peripheral.mu;
    mu_alt = B(q + j) * A(i - p);
    s = kg.peripheral.s;
  }
};

std::vector<FamilyCase> torus_cases(const KnotGroup& kg, int n, int N) {
  TorusData t(kg);
  const int p = t.p, q = t.q, i = t.i, j = t.j;
  const Word T = t.mu.pow(N) * t.s;
  std::vector<FamilyCase> out;
  {
    // n minimal with b^{nj} a^{ni} > 1
    Word X = B(static_cast<std::int64_t>(n) * j) * A(static_cast<std::int64_t>(n) * i);
    Word Y = A(static_cast<std::int64_t>(1 - n) * i) * B(static_cast<std::int64_t>(1 - n) * j);
    std::int64_t l = floor_mod(static_cast<std::int64_t>(1 - n) * j, q);
    std::vector<HintFactor> parts{atom(X)};
    if (!Y.empty()) parts.push_back(atom(Y));
    FamilyCase fc;
    fc.id = "torus-case1";
    fc.hint = {"torus case 1", T,
               {atom(B(), static_cast<int>(l)), composite(X * Y, parts, N), atom(B(), static_cast<int>(q - l))}, {}};
    fc.hyps = {pos(t.s), pos(A()), pos(B()), pos(X)};
    if (!Y.empty()) fc.hyps.push_back(pos(Y));
    fc.shape = "mu^N s = b^l (b^(nj) a^(ni) a^((1-n)i) b^((1-n)j))^N b^(q-l)";
    out.push_back(fc);
  }
  {
    Word X = B(static_cast<std::int64_t>(1 - n) * (q + j)) * A(static_cast<std::int64_t>(1 - n) * (i - p));
    Word Y = A(static_cast<std::int64_t>(n) * (i - p)) * B(static_cast<std::int64_t>(n) * (q + j));
    std::int64_t l = floor_mod(static_cast<std::int64_t>(n) * (q + j), q);
    std::vector<HintFactor> parts;
    if (!X.empty()) parts.push_back(atom(X));
    parts.push_back(atom(Y));
    FamilyCase fc;
    fc.id = "torus-case2";
    fc.hint = {"torus case 2", T,
               {atom(B(), static_cast<int>(l)), composite(X * Y, parts, N), atom(B(), static_cast<int>(q - l))},
               {t.mu_alt.pow(N) * t.s}};
    fc.hyps = {pos(t.s), pos(A()), pos(B()), pos(Y)};
    if (!X.empty()) fc.hyps.push_back(pos(X));
    fc.shape = "mu^N s = b^l ((b^((1-n)(q+j)) a^((1-n)(i-p))) a^(n(i-p)) b^(n(q+j)))^N b^(q-l)";
    out.push_back(fc);
  }
  return out;
}

std::vector<FamilyCase> torus_endpoint_cases(const KnotGroup& kg) {
  TorusData t(kg);
  std::vector<FamilyCase> out;
  const Word target = t.mu.inverse() * t.s;  // mu^(pq-1) lambda
  {
    FamilyCase fc;
    fc.id = "torus-endpoint";
    fc.hint = {"mu^(pq-1) lambda = a^(p-i) b^-j", target, {atom(A(), t.p - t.i), atom(B(), -t.j)}, {}};
    fc.hyps = {pos(t.s), pos(A()), pos(B())};
    fc.shape = "mu^(pq-1) lambda = a^(p-i) b^(-j)";
    out.push_back(fc);
  }
  {
    FamilyCase fc;
    fc.id = "torus-a-positive";
    fc.hint = {"1 > a makes a^p negative", t.s.inverse(), {atom(A(-1), t.p)}, {}};
    fc.hyps = {pos(t.s), neg(A())};
    fc.shape = "s^-1 = (a^-1)^p";
    out.push_back(fc);
  }
  {
    FamilyCase fc;
    fc.id = "torus-b-positive";
    fc.hint = {"1 > b makes b^q negative", t.s.inverse(), {atom(B(-1), t.q)}, {}};
    fc.hyps = {pos(t.s), neg(B())};
    fc.shape = "s^-1 = (b^-1)^q";
    out.push_back(fc);
  }
  {
    Word U = A(static_cast<std::int64_t>(-t.j) * (t.i - t.p)) * B(static_cast<std::int64_t>(-t.j) * (t.q + t.j));
    Word V = B(static_cast<std::int64_t>(t.q + t.j) * t.j) * A(static_cast<std::int64_t>(t.q + t.j) * t.i);
    FamilyCase fc;
    fc.id = "torus-split-negative-product";
    fc.hint = {"both alternatives negative make a negative", A(-1), {atom(V.inverse()), atom(U.inverse())}, {}};
    fc.hyps = {pos(A()), neg(U), neg(V)};
    fc.shape = "a^-1 = (b^((q+j)j) a^((q+j)i))^-1 (a^((-j)(i-p)) b^((-j)(q+j)))^-1";
    out.push_back(fc);
  }
  return out;
}

std::vector<FamilyIdentity> torus_identities(const KnotGroup& kg, int n, int N) {
  TorusData t(kg);
  const int p = t.p, q = t.q, i = t.i, j = t.j;
  std::vector<FamilyIdentity> out;
  Word lambda = kg.peripheral.lambda;
  Word lhs = t.mu.pow(N + p * q) * lambda;
  {
    Word X = B(static_cast<std::int64_t>(n) * j) * A(static_cast<std::int64_t>(n) * i);
    Word Y = A(static_cast<std::int64_t>(1 - n) * i) * B(static_cast<std::int64_t>(1 - n) * j);
    std::int64_t l = floor_mod(static_cast<std::int64_t>(1 - n) * j, q);
    out.push_back({"torus-case1-line1", lhs, t.mu.pow(N) * A(p), {}});
    out.push_back({"torus-case1-line2", lhs,
                   B(static_cast<std::int64_t>(1 - n) * j) * (X * Y).pow(N) * B(static_cast<std::int64_t>(n - 1) * j) * B(q), {}});
    out.push_back({"torus-case1-final", lhs, B(l) * (X * Y).pow(N) * B(q - l), {}});
  }
  {
    Word X = B(static_cast<std::int64_t>(1 - n) * (q + j)) * A(static_cast<std::int64_t>(1 - n) * (i - p));
    Word Y = A(static_cast<std::int64_t>(n) * (i - p)) * B(static_cast<std::int64_t>(n) * (q + j));
    std::int64_t nq = static_cast<std::int64_t>(n) * (q + j);
    std::int64_t l = floor_mod(nq, q);
    out.push_back({"torus-case2-line1", lhs, t.mu_alt.pow(N) * A(p), {}});
    out.push_back({"torus-case2-line2", lhs, B(nq) * (X * Y).pow(N) * B(q - nq), {}});
    out.push_back({"torus-case2-final", lhs, B(l) * (X * Y).pow(N) * B(q - l), {}});
  }
  return out;
}

std::vector<FamilyIdentity> torus_fixed_identities(const KnotGroup& kg) {
  TorusData t(kg);
  std::vector<FamilyIdentity> out;
  Word lhs = t.mu.pow(t.p * t.q - 1) * kg.peripheral.lambda;
  out.push_back({"torus-endpoint-line1", lhs, (B(t.j) * A(t.i)).inverse() * A(t.p), {}});
  out.push_back({"torus-endpoint-line2", lhs, A(t.p - t.i) * B(-t.j), {}});
  out.push_back({"torus-mu-pq-lambda", t.mu.pow(t.p * t.q) * kg.peripheral.lambda, A(t.p), {}});
  Word U = A(static_cast<std::int64_t>(-t.j) * (t.i - t.p)) * B(static_cast<std::int64_t>(-t.j) * (t.q + t.j));
  Word V = B(static_cast<std::int64_t>(t.q + t.j) * t.j) * A(static_cast<std::int64_t>(t.q + t.j) * t.i);
  out.push_back({"torus-split-product", U * V, A(static_cast<std::int64_t>(t.p) * t.j + static_cast<std::int64_t>(t.q) * t.i), {}});
  out.push_back({"torus-split-product-is-a", U * V, A(), {}});
  return out;
}

std::vector<FamilyIdentity> pretzel_identities(int m, int N) {
  Twisted t(1, m);
  const Word w = B(-1) * A();
  std::vector<FamilyIdentity> out;
  out.push_back({"pretzel-commute", t.target(N), t.s1 * t.mu2.pow(N), t.commute(N)});
  out.push_back({"pretzel-s-a-form", t.s1, A() * (A() * w.pow(m)).pow(2), {}});
  out.push_back({"pretzel-s-b-form", t.s1, B() * (B(2) * w.pow(m)).pow(2), {}});
  out.push_back({"pretzel-mu-power", t.mu1.pow(N), B(2) * (A(-1) * B(2)).pow(N - 1) * A(-1), {}});
  if (m >= 1) {
    out.push_back({"pretzel-w-power", w.pow(m), B(-1) * (t.mu1i * B()).pow(m - 1) * A(), {}});
    out.push_back({"pretzel-w-power-2", w.pow(m),
                   B(-2) * ((B() * A(-1)) * (A(2) * B(-2))).pow(m - 1) * B() * A(), {}});
  }
  out.push_back({"pretzel-case2-power", (B(-3) * A(2)).pow(N), B(-2) * (w * t.mu1i).pow(N - 1) * w * A(), {}});
  return out;
}

std::vector<FamilyIdentity> twisted1_identities(int k, int N) {
  Twisted t(k, 1);
  const Word w1 = B(2 * k + 2) * A(-2), w2 = A(2) * B(-(2 * k + 1));
  std::vector<FamilyIdentity> out;
  out.push_back({"twisted1-commute", t.target(N), t.s1 * t.mu2.pow(N), t.commute(N)});
  out.push_back({"twisted1-s-short", t.s1, B(k + 1) * A() * B() * A(), {}});
  out.push_back({"twisted1-rewrite", A() * B(-k), t.mu1i * B(), {}});
  out.push_back({"twisted1-mu-power", t.mu1.pow(N), B(k + 1) * (A(-1) * B(k + 1)).pow(N - 1) * A(-1), {}});
  out.push_back({"twisted1-s-mu-form", t.s1, A() * (t.mu1i * B() * A()).pow(2), {}});
  out.push_back({"twisted1-case2-product", w1 * w2, B(), {}});
  out.push_back({"twisted1-subcase1-mu", t.mu1.pow(N), B(-k - 1) * (w1 * t.mu1i).pow(N) * B(k + 1), {}});
  out.push_back({"twisted1-subcase2-power", (B(-(2 * k + 1)) * A(2)).pow(N), B(-(2 * k + 1)) * w2.pow(N - 1) * A(2), {}});
  return out;
}

SuiteCertificate run_case(const FamilyCase& fc, const Presentation& pres, const std::string& params,
                          const Budget& budget) {
  SuiteCertificate sc;
  sc.id = fc.id;
  sc.params = params;
  auto cert = certificate_from_hint(fc.hint, fc.hyps, pres);
  if (!cert) {
    sc.cert.id = fc.id;
    sc.cert.target = fc.hint.goal;
    sc.cert.hypotheses = fc.hyps;
    sc.cert.group = pres;
    sc.report.failure = "factors not positive: an atom is not covered by the stated hypotheses";
    return sc;
  }
  sc.cert = *cert;
  sc.cert.id = fc.id;
  sc.report = verify_certificate(sc.cert, budget);
  return sc;
}

SuiteIdentity run_identity(const FamilyIdentity& fi, const Presentation& pres, const std::string& params,
                           const Budget& budget) {
  SuiteIdentity si{fi.id, params, fi.lhs, fi.rhs, Verdict::Unknown, ""};
  std::vector<Word> links{fi.lhs};
  links.insert(links.end(), fi.chain.begin(), fi.chain.end());
  links.push_back(fi.rhs);
  auto r = prove_chain(links, pres, budget);
  if (r.ok) {
    si.verdict = Verdict::Equal;
    si.method = pres.torus ? "normal-form" : (r.derivation.size() == 0 ? "free" : "relator-search");
  } else {
    auto v = equal_in_group(links[r.failed_link], links[r.failed_link + 1], pres, budget);
    si.verdict = v.kind == Verdict::Distinct ? Verdict::Distinct : Verdict::Unknown;
    si.method = v.method;
  }
  return si;
}

std::string np(int n, int N) { return "n=" + std::to_string(n) + " N=" + std::to_string(N); }
std::string Np(int N) { return "N=" + std::to_string(N); }

bool selected(const std::string& filter, const std::string& id) {
  return filter.empty() || id == filter || id.rfind(filter + "-", 0) == 0;
}

CertificateSuite build_suite(ProofFamily f, const FamilyParams& params, const std::vector<int>& n_range,
                             const std::vector<int>& N_range, const Budget& budget, const std::string& filter) {
  KnotGroup kg = family_group(f, params);
  CertificateSuite suite;
  suite.family = to_string(f);
  suite.label = family_label(f, params);
  const Presentation& pres = kg.presentation;
  auto add_shape = [&](const std::string& s) {
    if (std::find(suite.shapes.begin(), suite.shapes.end(), s) == suite.shapes.end()) suite.shapes.push_back(s);
  };
  auto add_tree = [&](const std::string& id, const std::string& ps, int N) {
    if (!selected(filter, id)) return;
    auto fi = family_implication(f, params, N);
    SuiteTree st;
    st.id = id;
    st.params = ps;
    CaseSplitOptions opts;
    opts.budget = budget;
    st.result = case_split_prove(fi.group, fi.root, fi.target, fi.branch_words, fi.hints, opts);
    if (st.result.ok) {
      st.checked = check_case_tree(st.result.tree, fi.group, budget, &st.error);
    } else {
      st.error = std::to_string(st.result.undischarged.size()) + " undischarged leaves";
    }
    suite.trees.push_back(std::move(st));
  };
  if (f == ProofFamily::Torus) {
    for (int n : n_range) {
      for (int N : N_range) {
        for (const auto& fc : torus_cases(kg, n, N)) {
          if (!selected(filter, fc.id)) continue;
          suite.certificates.push_back(run_case(fc, pres, np(n, N), budget));
          add_shape(fc.shape);
        }
        for (const auto& fi : torus_identities(kg, n, N))
          if (selected(filter, fi.id)) suite.identities.push_back(run_identity(fi, pres, np(n, N), budget));
      }
    }
    for (const auto& fc : torus_endpoint_cases(kg)) {
      if (!selected(filter, fc.id)) continue;
      suite.certificates.push_back(run_case(fc, pres, "", budget));
      add_shape(fc.shape);
    }
    for (const auto& fi : torus_fixed_identities(kg))
      if (selected(filter, fi.id)) suite.identities.push_back(run_identity(fi, pres, "", budget));
    add_tree("torus-endpoint-tree", "", 1);
    return suite;
  }
  for (int N : N_range) {
    auto cases = f == ProofFamily::Pretzel ? pretzel_cases(params.m, N) : twisted1_cases(params.k, N);
    for (const auto& fc : cases) {
      if (!selected(filter, fc.id)) continue;
      suite.certificates.push_back(run_case(fc, pres, Np(N), budget));
      add_shape(fc.shape);
    }
    auto ids = f == ProofFamily::Pretzel ? pretzel_identities(params.m, N) : twisted1_identities(params.k, N);
    for (const auto& fi : ids)
      if (selected(filter, fi.id)) suite.identities.push_back(run_identity(fi, pres, Np(N), budget));
    add_tree(std::string(to_string(f)) + "-tree", Np(N), N);
  }
  return suite;
}

void dedupe(std::vector<Word>& ws) {
  std::vector<Word> out;
  for (auto& w : ws)
    if (!w.empty() && std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  ws = std::move(out);
}

}  // namespace

FamilyImplication family_implication(ProofFamily f, const FamilyParams& params, int N) {
  KnotGroup kg = family_group(f, params);
  FamilyImplication fi;
  fi.group = kg.presentation;
  if (f == ProofFamily::Torus) {
    TorusData t(kg);
    fi.root = {pos(t.s)};
    fi.target = t.mu.inverse() * t.s;
    fi.branch_words = {A(), B()};
    for (const auto& fc : torus_endpoint_cases(kg)) fi.hints.push_back(fc.hint);
    return fi;
  }
  if (N < 1) throw std::invalid_argument("N must be positive");
  std::vector<FamilyCase> cases;
  if (f == ProofFamily::Pretzel) {
    Twisted t(1, params.m);
    const Word w = B(-1) * A();
    fi.root = {pos(t.s1)};
    fi.target = t.target(N);
    fi.branch_words = {t.mu1, w, A(), B(), A() * B(-1), A(2) * B(-2), A(2) * w.pow(params.m), A() * w.pow(params.m)};
    cases = pretzel_cases(params.m, N);
  } else {
    Twisted t(params.k, 1);
    fi.root = {pos(t.s1)};
    fi.target = t.target(N);
    fi.branch_words = {A(), B(), t.mu1, A(-1) * B(), B(2 * params.k + 2) * A(-2), A(2) * B(-(2 * params.k + 1))};
    cases = twisted1_cases(params.k, N);
  }
  dedupe(fi.branch_words);
  for (const auto& fc : cases) fi.hints.push_back(fc.hint);
  return fi;
}

CertificateSuite certify_family_identities(ProofFamily f, const FamilyParams& params, const std::vector<int>& n_range,
                                           const std::vector<int>& N_range, const Budget& budget) {
  return build_suite(f, params, n_range, N_range, budget, "");
}

std::vector<std::string> known_identity_ids() {
  return {"torus-case1",        "torus-case2",         "torus-endpoint",       "torus-a-positive",
          "torus-b-positive",   "torus-split-product",     "torus-split-negative-product", "torus-endpoint-tree",
          "pretzel-case1",      "pretzel-case2",       "pretzel-b-negative",   "pretzel-aux",
          "pretzel-commute",    "pretzel-tree",        "twisted1-both-negative", "twisted1-b-positive-a-negative",
          "twisted1-a-positive-b-negative", "twisted1-case1", "twisted1-subcase1", "twisted1-subcase2",
          "twisted1-case2-split", "twisted1-commute",  "twisted1-tree",        "mu-positive"};
}

CertificateSuite certify_identity(const std::string& id, ProofFamily f, const FamilyParams& params,
                                  const std::vector<int>& n_range, const std::vector<int>& N_range,
                                  const Budget& budget) {
  auto ids = known_identity_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw std::invalid_argument("unknown identity id '" + id + "'");
  auto suite = build_suite(f, params, n_range, N_range, budget, id);
  if (suite.total() == 0)
    throw std::invalid_argument("identity '" + id + "' does not belong to the " + std::string(to_string(f)) + " family");
  return suite;
}

}  // namespace lo
