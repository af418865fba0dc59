#include "lo/slope.hpp"

#include <numeric>
#include <stdexcept>

namespace lo {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational make_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational operator+(const Rational& x, const Rational& y) {
  return make_wide(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                   static_cast<__int128>(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  return make_wide(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw std::domain_error("rational division by zero");
  return make_wide(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  __int128 l = static_cast<__int128>(x.num_) * y.den_;
  __int128 r = static_cast<__int128>(y.num_) * x.den_;
  return l <=> r;
}

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Slope Slope::make(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("slope not primitive");
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

Rational Slope::value() const {
  if (q == 0) throw std::domain_error("slope 1/0 has no finite value");
  return Rational(p, q);
}

std::string Slope::str() const { return std::to_string(p) + "/" + std::to_string(q); }

bool slope_less(const Slope& x, const Slope& y) {
  if (x.infinite()) return false;
  if (y.infinite()) return true;
  return x.value() < y.value();
}

std::pair<Rational, Rational> decompose(Vec2 v0, Vec2 pq, Vec2 uv) {
  const auto [p, q] = pq;
  const auto [u, v] = uv;
  const std::int64_t det = p * v - q * u;
  if (det == 0) throw std::invalid_argument("decompose: singular basis");
  const auto [x, y] = v0;
  return {Rational(x * v - y * u, det), Rational(p * y - q * x, det)};
}

namespace {

void require_positive(const Slope& s, const char* what) {
  if (s.p <= 0 || s.q <= 0) throw std::domain_error(std::string(what) + " must have positive entries");
}

void require_between(const Slope& s0, const Slope& s1, const Slope& s) {
  Rational lo = std::min(s0.value(), s1.value());
  Rational hi = std::max(s0.value(), s1.value());
  if (!(lo < s.value() && s.value() < hi))
    throw std::domain_error("slope " + s.str() + " not strictly between " + s0.str() + " and " + s1.str());
}

}  // namespace

bool lemma_opp_check(const Slope& s0, const Slope& s1, const Slope& s, Vec2 uv) {
  require_positive(s0, "s0");
  require_positive(s1, "s1");
  require_positive(s, "s");
  require_between(s0, s1, s);
  if (s.p * uv[1] - s.q * uv[0] == 0) throw std::domain_error("basis vectors are dependent");
  auto d0 = decompose(s0.vec(), s.vec(), uv).second;
  auto d1 = decompose(s1.vec(), s.vec(), uv).second;
  return d0 * d1 < 0;
}

Vec2 Z2Ordering::kernel_direction() const {
  std::int64_t g = std::gcd(alpha, beta);
  Vec2 k{beta / g, -alpha / g};
  if (k[0] < 0 || (k[0] == 0 && k[1] < 0)) k = {-k[0], -k[1]};
  return k;
}

int z2_sign(const Z2Ordering& ord, Vec2 v) {
  std::int64_t f = ord.alpha * v[0] + ord.beta * v[1];
  if (f > 0) return 1;
  if (f < 0) return -1;
  if (v[0] == 0 && v[1] == 0) return 0;
  Vec2 k = ord.kernel_direction();
  // v is a multiple of k
  std::int64_t c = k[0] != 0 ? v[0] / k[0] : v[1] / k[1];
  return c > 0 ? ord.tie_break : -ord.tie_break;
}

std::vector<Z2Ordering> convex_orderings(const Slope& pq) {
  std::vector<Z2Ordering> out;
  for (int s : {1, -1})
    for (int t : {1, -1}) out.push_back({s * pq.q, -s * pq.p, t});
  return out;
}

bool prop_opp_check(const Slope& pq, const Slope& s0, const Slope& s1) {
  require_positive(pq, "pq");
  require_positive(s0, "s0");
  require_positive(s1, "s1");
  require_between(s0, s1, pq);
  for (const auto& ord : convex_orderings(pq))
    if (z2_sign(ord, s0.vec()) == z2_sign(ord, s1.vec())) return false;
  return true;
}

}  // namespace lo
