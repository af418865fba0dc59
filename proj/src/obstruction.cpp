#include "lo/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

#include "lo/equality.hpp"
#include "lo/torus_normal_form.hpp"

namespace lo {

std::string ObstructionComponent::str() const {
  if (kind == ComponentKind::Point) return "{" + rational_str(lo) + "}";
  std::string out = lo_closed ? "[" : "(";
  out += rational_str(lo) + ", ";
  out += hi ? rational_str(*hi) : std::string("inf");
  out += hi && hi_closed ? "]" : ")";
  return out;
}

bool ObstructionComponent::contains(const Rational& r) const {
  if (kind == ComponentKind::Point) return r == lo;
  if (r < lo || (r == lo && !lo_closed)) return false;
  if (!hi) return true;
  return r < *hi || (r == *hi && hi_closed);
}

bool ObstructionReport::obstructs(const Rational& r) const {
  for (const auto& c : merged)
    if (c.contains(r)) return true;
  return false;
}

std::optional<Rational> ObstructionReport::infimum() const {
  std::optional<Rational> best;
  for (const auto& c : merged)
    if (!best || c.lo < *best) best = c.lo;
  return best;
}

ObstructionComponent interval_obstruction(const Slope& s0, const Slope& s1, const Evidence& ev) {
  if (s0 == s1) throw std::invalid_argument("degenerate interval: equal endpoint slopes");
  if (s0.infinite() || s1.infinite()) throw std::invalid_argument("endpoint slopes must be finite");
  if (!ev.certified) throw std::invalid_argument("evidence " + ev.id + " is not certified");
  bool match = (ev.positive == s0 && ev.negative == s1) || (ev.positive == s1 && ev.negative == s0);
  if (!match) throw std::invalid_argument("evidence " + ev.id + " does not concern " + s0.str() + ", " + s1.str());
  ObstructionComponent c;
  c.kind = ComponentKind::Interval;
  c.lo = std::min(s0.value(), s1.value());
  c.hi = std::max(s0.value(), s1.value());
  c.provenance = "endpoint-pair";
  c.evidence.push_back(ev.id);
  return c;
}

MonotoneResult monotone_obstruction(const Slope& base, const std::vector<Evidence>& per_n,
                                    const std::optional<Evidence>& family) {
  MonotoneResult res;
  if (family && family->certified) {
    ObstructionComponent c;
    c.lo = base.value();
    c.provenance = "monotone-family";
    c.evidence.push_back(family->id);
    res.components.push_back(c);
    return res;
  }
  std::int64_t best = 0;
  std::string best_id;
  for (const auto& ev : per_n) {
    if (!ev.certified || !(ev.positive == base) || ev.negative.q != base.q) continue;
    std::int64_t n = ev.negative.p - base.p;
    if (n > best) {
      best = n;
      best_id = ev.id;
    }
  }
  if (best > 0) {
    Slope top = Slope::make(base.p + best, base.q);
    Evidence ev{best_id, "cone-search", base, top, true, ""};
    auto c = interval_obstruction(base, top, ev);
    res.components.push_back(c);
    res.gap = "certified up to N=" + std::to_string(best) + "; slopes above " + top.str() + " not covered";
  } else {
    res.gap = "no certified N; nothing obstructed above " + base.str();
  }
  return res;
}

TorsionCheck torsion_endpoint_report(const KnotGroup& kg, const Slope& slope) {
  if (kg.family != Family::Torus) throw std::domain_error("torsion endpoint check needs a torus knot group");
  if (!(slope == Slope::integer(kg.peripheral.framing)))
    throw std::domain_error("slope " + slope.str() + " is not the framing slope");
  Word w = peripheral_word(kg, slope);
  if (!(torus_normal_form(w, kg.p, kg.q) == torus_normal_form(Word::a(kg.p), kg.p, kg.q)))
    throw std::domain_error("peripheral word is not a^p");
  Presentation quotient;
  quotient.relators.push_back(kg.relator());
  quotient.relators.push_back(cyclic_core(w));
  TorsionCheck out;
  Budget b;
  Word ap = Word::a(kg.p), bq = Word::b(kg.q);
  auto da = search_derivation(ap, quotient, b);
  auto db = search_derivation(bq, quotient, b);
  if (da && da->proves_trivial(quotient, ap)) out.derivation_a = da->size();
  if (db && db->proves_trivial(quotient, bq)) out.derivation_b = db->size();
  out.ok = da && db && out.derivation_a > 0 && out.derivation_b > 0;
  return out;
}

bool torsion_endpoint_check(const KnotGroup& kg, const Slope& slope) {
  return torsion_endpoint_report(kg, slope).ok;
}

std::vector<ObstructionComponent> merge_components(std::vector<ObstructionComponent> parts) {
  for (auto& c : parts) {
    if (c.kind == ComponentKind::Point) {
      c.hi = c.lo;
      c.lo_closed = c.hi_closed = true;
    }
  }
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.lo_closed && !y.lo_closed;
  });
  std::vector<ObstructionComponent> out;
  for (auto c : parts) {
    if (!out.empty()) {
      auto& last = out.back();
      bool touches;
      if (!last.hi) {
        touches = true;
      } else if (c.lo < *last.hi) {
        touches = true;
      } else if (c.lo == *last.hi) {
        touches = last.hi_closed || c.lo_closed;
      } else {
        touches = false;
      }
      if (touches) {
        if (last.hi) {
          if (!c.hi) {
            last.hi.reset();
            last.hi_closed = false;
          } else if (*c.hi > *last.hi || (*c.hi == *last.hi && c.hi_closed)) {
            last.hi = c.hi;
            last.hi_closed = c.hi_closed;
          }
        }
        last.kind = ComponentKind::Interval;
        if (last.provenance != c.provenance) last.provenance = "union";
        last.evidence.insert(last.evidence.end(), c.evidence.begin(), c.evidence.end());
        continue;
      }
    }
    out.push_back(c);
  }
  for (auto& c : out)
    if (c.hi && *c.hi == c.lo && c.lo_closed) c.kind = ComponentKind::Point;
  return out;
}

}  // namespace lo
