#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lo/families.hpp"
#include "lo/implication.hpp"
#include "lo/obstruction.hpp"

namespace lo {

struct PlannerConfig {
  std::vector<int> cone_N = {1, 2, 3, 4, 5};  // torus: implication table above pq
  std::vector<int> twisted_cone_N = {1};       // twisted families: table above the framing slope
  int radius = 6;
  int min_radius = 1;         // scan radii from here up to radius
  int twisted_radius = 3;
  std::vector<int> family_N = {1, 2, 3, 4};
  std::vector<int> torus_n = {1, 2, 3};
  Budget budget;
  BallBudget ball;
};

// What `obstruct` is asked about. Twisted groups with k = 1 use the pretzel argument,
// with m = 1 the twisted1 argument, otherwise with m = 0 the torus argument for (3, 3k+2).
struct KnotRequest {
  Family family = Family::Torus;
  int p = 2, q = 3;
  int k = 0, m = 0;
};

struct PlannedObstruction {
  KnotGroup group;
  ObstructionReport report;
  std::vector<ImplicationRow> table;      // above the base slope
  std::vector<ImplicationRow> endpoint;   // torus: the pq-1 direction
  std::optional<CertificateSuite> suite;  // family certificates and case trees
  std::optional<ProofFamily> proof_family;
  FamilyParams proof_params;
  bool torsion = false;
};

PlannedObstruction plan_obstruction(const KnotRequest& req, const PlannerConfig& cfg = {});

}  // namespace lo
