#include "lo/finite_quotient.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace lo {

Perm Perm::identity(int n) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& o) const {
  std::vector<std::uint8_t> v(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) v[x] = o.img_[img_[x]];
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> v(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) v[img_[x]] = static_cast<std::uint8_t>(x);
  return Perm(std::move(v));
}

Perm Perm::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Perm r = identity(degree());
  Perm base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    out += '(';
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
      y = img_[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm FiniteQuotientWitness::image(const Word& w) const {
  Perm r = Perm::identity(degree);
  for (const auto& s : w.syllables()) r = r * (s.gen == Gen::A ? a : b).pow(s.exp);
  return r;
}

bool FiniteQuotientWitness::satisfies(const Presentation& pres) const {
  for (const auto& r : pres.relators)
    if (!image(r).is_identity()) return false;
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Perm> cycle_type_reps(int n) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(n, n, cur, parts);
  std::vector<Perm> out;
  for (const auto& part : parts) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
    int start = 0;
    for (int len : part) {
      for (int i = 0; i < len; ++i)
        v[static_cast<std::size_t>(start + i)] = static_cast<std::uint8_t>(start + (i + 1) % len);
      start += len;
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

namespace {

const std::vector<Perm>& cached_perms(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Perm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, all_perms(n)).first;
  return it->second;
}

template <class F>
bool for_each_quotient(const Presentation& pres, int max_degree, F&& f) {
  for (int n = 2; n <= max_degree; ++n) {
    const auto& perms = cached_perms(n);
    for (const auto& pa : cycle_type_reps(n)) {
      for (const auto& pb : perms) {
        FiniteQuotientWitness w{n, pa, pb};
        if (!w.satisfies(pres)) continue;
        if (f(w)) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<FiniteQuotientWitness> enumerate_quotients(const Presentation& pres, int max_degree) {
  std::vector<FiniteQuotientWitness> out;
  for_each_quotient(pres, max_degree, [&](const FiniteQuotientWitness& w) {
    out.push_back(w);
    return false;
  });
  return out;
}

std::optional<FiniteQuotientWitness> find_separating_quotient(const Word& u, const Word& v,
                                                              const Presentation& pres,
                                                              int max_degree) {
  if (u == v) return std::nullopt;
  std::optional<FiniteQuotientWitness> found;
  Word d = u * v.inverse();
  for_each_quotient(pres, max_degree, [&](const FiniteQuotientWitness& w) {
    if (!w.image(d).is_identity()) {
      found = w;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace lo
