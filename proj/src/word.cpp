#include "lo/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lo {

namespace {

void push_syllable(std::vector<Syllable>& out, Syllable s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exp += s.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(s);
}

}  // namespace

Word free_reduce(const std::vector<Syllable>& raw) { return Word(raw); }

Word::Word(std::vector<Syllable> raw) {
  syl_.reserve(raw.size());
  for (const auto& s : raw) push_syllable(syl_, s);
}

Word Word::gen(Gen g, std::int64_t e) {
  Word w;
  if (e != 0) w.syl_.push_back({g, e});
  return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
  Word w;
  for (Letter l : letters) {
    Gen g = (l == 1 || l == -1) ? Gen::A : Gen::B;
    push_syllable(w.syl_, {g, l > 0 ? 1 : -1});
  }
  return w;
}

Word Word::parse(std::string_view text) {
  std::vector<Syllable> raw;
  std::size_t i = 0;
  bool any = false;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i) == "1") return Word();
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    char c = text[i];
    Gen g;
    std::int64_t sign;
    switch (c) {
      case 'a': g = Gen::A; sign = 1; break;
      case 'A': g = Gen::A; sign = -1; break;
      case 'b': g = Gen::B; sign = 1; break;
      case 'B': g = Gen::B; sign = -1; break;
      default:
        throw std::invalid_argument("bad character '" + std::string(1, c) + "' in word");
    }
    ++i;
    std::int64_t e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string num(text.substr(start, i - start));
      if (num.empty() || num == "-" || num == "+")
        throw std::invalid_argument("missing exponent in word");
      e = std::stoll(num);
    }
    raw.push_back({g, sign * e});
    any = true;
  }
  if (!any && !text.empty() && text.find_first_not_of(" \t\n") != std::string_view::npos)
    throw std::invalid_argument("empty word text");
  return Word(std::move(raw));
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& s : syl_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const auto& s : syl_) {
    Letter base = s.gen == Gen::A ? 1 : 2;
    Letter l = s.exp > 0 ? base : static_cast<Letter>(-base);
    std::int64_t n = s.exp < 0 ? -s.exp : s.exp;
    for (std::int64_t k = 0; k < n; ++k) out.push_back(l);
  }
  return out;
}

Word Word::inverse() const {
  Word w;
  w.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  Word r;
  Word base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

Word Word::conjugate_by(const Word& g) const { return g * *this * g.inverse(); }

std::int64_t Word::exp_sum(Gen g) const {
  std::int64_t n = 0;
  for (const auto& s : syl_)
    if (s.gen == g) n += s.exp;
  return n;
}

std::string Word::str() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const auto& s : syl_) {
    char c = s.gen == Gen::A ? 'a' : 'b';
    if (s.exp < 0) c = static_cast<char>(std::toupper(c));
    std::int64_t n = s.exp < 0 ? -s.exp : s.exp;
    out.append(static_cast<std::size_t>(n), c);
  }
  return out;
}

std::string Word::token_str() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const auto& s : syl_) {
    if (!out.empty()) out += ' ';
    out += s.gen == Gen::A ? 'a' : 'b';
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

bool Word::operator<(const Word& o) const {
  auto la = length(), lb = o.length();
  if (la != lb) return la < lb;
  auto x = letters(), y = o.letters();
  // a < A < b < B
  auto key = [](Letter l) { return l == 1 ? 0 : l == -1 ? 1 : l == 2 ? 2 : 3; };
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return key(x[i]) < key(y[i]);
  return false;
}

Word operator*(const Word& x, const Word& y) {
  Word r = x;
  r *= y;
  return r;
}

Word& Word::operator*=(const Word& y) {
  for (const auto& s : y.syl_) push_syllable(syl_, s);
  return *this;
}

Word concat(const Word& x, const Word& y) { return x * y; }
Word invert(const Word& w) { return w.inverse(); }
Word power(const Word& w, std::int64_t n) { return w.pow(n); }
Word conjugate(const Word& w, const Word& g) { return w.conjugate_by(g); }

Word cyclic_core(const Word& w, Word* conj) {
  std::vector<Syllable> s = w.syllables();
  std::vector<Syllable> t;
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen && (s[lo].exp > 0) != (s[hi - 1].exp > 0)) {
    std::int64_t x = s[lo].exp, y = s[hi - 1].exp;
    std::int64_t m = std::min(x < 0 ? -x : x, y < 0 ? -y : y);
    std::int64_t c = x > 0 ? m : -m;
    t.push_back({s[lo].gen, c});
    s[lo].exp -= c;
    s[hi - 1].exp += c;
    if (s[lo].exp == 0) ++lo;
    if (s[hi - 1].exp == 0) --hi;
  }
  if (conj) *conj = Word(t);
  return Word(std::vector<Syllable>(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                    s.begin() + static_cast<std::ptrdiff_t>(hi)));
}

void reduce_letters(std::vector<Letter>& w) {
  std::size_t k = 0;
  for (Letter l : w) {
    if (k > 0 && w[k - 1] == -l) {
      --k;
    } else {
      w[k++] = l;
    }
  }
  w.resize(k);
}

std::string letters_str(const std::vector<Letter>& w) { return Word::from_letters(w).str(); }

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& s : w.syllables()) {
    h ^= static_cast<std::size_t>(s.exp) * 2 + static_cast<std::size_t>(s.gen);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace lo
