#include "lo/torus_normal_form.hpp"

#include <numeric>
#include <stdexcept>

#include "lo/presentation.hpp"

namespace lo {

namespace {

std::int64_t floor_div(std::int64_t x, std::int64_t m) {
  std::int64_t d = x / m;
  if ((x % m != 0) && ((x < 0) != (m < 0))) --d;
  return d;
}

}  // namespace

TorusNormalForm torus_normal_form(const Word& w, int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus normal form needs coprime p, q >= 2");
  TorusNormalForm nf;
  auto& st = nf.syllables;
  for (const auto& s : w.syllables()) {
    std::int64_t e = s.exp;
    if (!st.empty() && st.back().gen == s.gen) {
      e += st.back().exp;
      st.pop_back();
    }
    std::int64_t order = s.gen == Gen::A ? p : q;
    std::int64_t k = floor_div(e, order);
    nf.t += k;
    std::int64_t r = e - k * order;
    if (r != 0) st.push_back({s.gen, r});
  }
  return nf;
}

std::string TorusNormalForm::str() const {
  std::string out = "z^" + std::to_string(t);
  for (const auto& s : syllables)
    out += std::string(" ") + (s.gen == Gen::A ? "a" : "b") + "^" + std::to_string(s.exp);
  return out;
}

Word TorusNormalForm::to_word(int p, int) const {
  Word w = Word::a(static_cast<std::int64_t>(p) * t);
  w *= Word(syllables);
  return w;
}

std::size_t TorusNormalFormHash::operator()(const TorusNormalForm& n) const {
  std::size_t h = std::hash<std::int64_t>()(n.t) * 1000003u;
  for (const auto& s : n.syllables) {
    h ^= static_cast<std::size_t>(s.exp) * 2 + static_cast<std::size_t>(s.gen);
    h *= 1099511628211ull;
  }
  return h;
}

Presentation Presentation::torus_knot(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus knot needs coprime p, q >= 2");
  Presentation pr;
  pr.relators.push_back(Word::a(p) * Word::b(-q));
  pr.torus = TorusParams{p, q};
  return pr;
}

Presentation Presentation::one_relator(const Word& r) {
  Presentation pr;
  pr.relators.push_back(cyclic_core(r));
  // Recognize a^p b^-q up to rotation and inversion.
  Word c = pr.relators.back();
  const auto& s = c.syllables();
  if (s.size() == 2) {
    const Syllable* sa = s[0].gen == Gen::A ? &s[0] : &s[1];
    const Syllable* sb = s[0].gen == Gen::A ? &s[1] : &s[0];
    std::int64_t p = sa->exp, q = sb->exp;
    if ((p > 0) != (q > 0)) {
      p = p < 0 ? -p : p;
      q = q < 0 ? -q : q;
      if (p >= 2 && q >= 2 && std::gcd(p, q) == 1)
        pr.torus = TorusParams{static_cast<int>(p), static_cast<int>(q)};
    }
  }
  return pr;
}

void Presentation::validate() const {
  for (const auto& r : relators)
    if (r.empty() || !(cyclic_core(r) == r))
      throw std::invalid_argument("relator " + r.str() + " is not cyclically reduced");
}

}  // namespace lo
