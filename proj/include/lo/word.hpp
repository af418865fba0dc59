#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lo {

enum class Gen : std::uint8_t { A = 0, B = 1 };

struct Syllable {
  Gen gen;
  std::int64_t exp;
  bool operator==(const Syllable&) const = default;
};

// Letter code: +1 = a, -1 = a^-1, +2 = b, -2 = b^-1.
using Letter = std::int8_t;

// Freely reduced word over {a, b}, stored as merged syllables.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> raw);

  static Word gen(Gen g, std::int64_t e = 1);
  static Word a(std::int64_t e = 1) { return gen(Gen::A, e); }
  static Word b(std::int64_t e = 1) { return gen(Gen::B, e); }
  static Word from_letters(const std::vector<Letter>& letters);

  // "aaBBB" or "a^2 b^-3"; "1" and "" are the empty word.
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  std::int64_t length() const;
  std::vector<Letter> letters() const;

  Word inverse() const;
  Word pow(std::int64_t n) const;
  Word conjugate_by(const Word& g) const;  // g w g^-1

  // Exponent sums of a and b.
  std::int64_t exp_sum(Gen g) const;

  std::string str() const;         // letter grammar
  std::string token_str() const;   // a^3 b^-2 grammar

  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const;  // shortlex on letters

  friend Word operator*(const Word& x, const Word& y);
  Word& operator*=(const Word& y);

 private:
  std::vector<Syllable> syl_;
};

Word free_reduce(const std::vector<Syllable>& raw);
Word concat(const Word& x, const Word& y);
Word invert(const Word& w);
Word power(const Word& w, std::int64_t n);
Word conjugate(const Word& w, const Word& g);

// Strips t ... t^-1 from the ends; returns the cyclically reduced core and sets t.
Word cyclic_core(const Word& w, Word* conj = nullptr);

// Reduced letter-level helpers used by the search code.
void reduce_letters(std::vector<Letter>& w);
std::string letters_str(const std::vector<Letter>& w);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace lo
