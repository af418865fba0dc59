#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lo/knot_group.hpp"
#include "lo/slope.hpp"

namespace lo {

// A certified implication: sigma(mu^positive)=+ forces sigma(mu^negative)=+,
// witnessed by an Unsat search or a verified certificate family.
struct Evidence {
  std::string id;
  std::string kind;  // cone-search | certificate-family | torsion-quotient
  Slope positive;
  Slope negative;
  bool certified = false;
  std::string detail;
};

enum class ComponentKind { Interval, Point };

// Endpoint nullopt on the right means +infinity.
struct ObstructionComponent {
  ComponentKind kind = ComponentKind::Interval;
  Rational lo;
  std::optional<Rational> hi;
  bool lo_closed = false;
  bool hi_closed = false;
  std::string provenance;  // endpoint-pair | monotone-family | torsion-endpoint | union
  std::vector<std::string> evidence;

  std::string str() const;
  bool contains(const Rational& r) const;
};

struct ObstructionReport {
  std::string knot;
  std::vector<std::string> hypotheses;
  std::vector<ObstructionComponent> components;
  std::vector<ObstructionComponent> merged;
  std::vector<Evidence> evidence;
  std::vector<std::string> caveats;

  bool obstructs(const Rational& r) const;
  std::optional<Rational> infimum() const;
};

ObstructionComponent interval_obstruction(const Slope& s0, const Slope& s1, const Evidence& ev);

struct MonotoneResult {
  std::vector<ObstructionComponent> components;
  std::optional<std::string> gap;
};

// per_n[N-1] certifies base => base + N (as mu-exponent shift).
MonotoneResult monotone_obstruction(const Slope& base, const std::vector<Evidence>& per_n,
                                    const std::optional<Evidence>& family);

struct TorsionCheck {
  bool ok = false;
  std::size_t derivation_a = 0;  // insertions proving a^p = 1
  std::size_t derivation_b = 0;  // insertions proving b^q = 1
};

TorsionCheck torsion_endpoint_report(const KnotGroup& kg, const Slope& slope);
bool torsion_endpoint_check(const KnotGroup& kg, const Slope& slope);

std::vector<ObstructionComponent> merge_components(std::vector<ObstructionComponent> parts);

}  // namespace lo
