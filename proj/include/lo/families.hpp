#pragma once

#include <string>
#include <vector>

#include "lo/case_tree.hpp"
#include "lo/certificate.hpp"
#include "lo/knot_group.hpp"

namespace lo {

enum class ProofFamily { Torus, Pretzel, Twisted1 };

const char* to_string(ProofFamily f);
ProofFamily parse_family(const std::string& s);  // torus | pretzel | twisted1

struct FamilyParams {
  int p = 2, q = 3;  // torus
  int m = 0;         // pretzel
  int k = 0;         // twisted1
};

KnotGroup family_group(ProofFamily f, const FamilyParams& params);
std::string family_label(ProofFamily f, const FamilyParams& params);

struct SuiteCertificate {
  std::string id;      // e.g. "torus-case1", "torus-split-negative-product"
  std::string params;  // "n=2 N=3"
  PositivityCertificate cert;
  CertificateReport report;
};

struct SuiteIdentity {
  std::string id;
  std::string params;
  Word lhs;
  Word rhs;
  Verdict verdict = Verdict::Unknown;
  std::string method;
};

struct SuiteTree {
  std::string id;
  std::string params;
  CaseSplitResult result;
  bool checked = false;
  std::string error;
};

struct CertificateSuite {
  std::string family;
  std::string label;
  std::vector<SuiteCertificate> certificates;
  std::vector<SuiteIdentity> identities;
  std::vector<SuiteTree> trees;
  std::vector<std::string> shapes;  // N-independent factor shapes recorded as family evidence

  std::size_t total() const { return certificates.size() + identities.size() + trees.size(); }
  std::size_t passed() const;
  bool all_ok() const { return passed() == total(); }
};

// Ranges are inclusive lists of values; n only matters for the torus family.
CertificateSuite certify_family_identities(ProofFamily f, const FamilyParams& params,
                                           const std::vector<int>& n_range,
                                           const std::vector<int>& N_range, const Budget& budget = {});

// The implication s > 1 => mu^N s > 1 as a case split (pretzel, twisted1), or
// mu^pq lambda > 1 => mu^(pq-1) lambda > 1 (torus).
struct FamilyImplication {
  Presentation group;
  std::vector<Hypothesis> root;
  Word target;
  std::vector<Word> branch_words;
  std::vector<CertificateHint> hints;
};
FamilyImplication family_implication(ProofFamily f, const FamilyParams& params, int N);

// Known identity ids for the CLI certify command.
std::vector<std::string> known_identity_ids();
// Single named identity; throws std::invalid_argument for an unknown id.
CertificateSuite certify_identity(const std::string& id, ProofFamily f, const FamilyParams& params,
                                  const std::vector<int>& n_range, const std::vector<int>& N_range,
                                  const Budget& budget = {});

std::vector<int> int_range(int lo, int hi);

}  // namespace lo
