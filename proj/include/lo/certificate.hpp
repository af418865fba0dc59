#pragma once

#include <string>
#include <vector>

#include "lo/cone_search.hpp"
#include "lo/equality.hpp"
#include "lo/presentation.hpp"

namespace lo {

struct Justification {
  enum class Kind { Hypothesis, InverseOfNegative, SubCertificate };
  Kind kind = Kind::Hypothesis;
  int index = 0;  // into hypotheses, or into subs
};

const char* to_string(Justification::Kind k);

struct Factor {
  Word word;
  int repeat = 1;  // the factor occurs this many times in a row
  Justification why;
};

// target = product of factors, each positive under the hypotheses.
// chain lists optional intermediate words; consecutive entries of
// target, chain..., product must be Equal link by link.
struct PositivityCertificate {
  std::string id;
  Word target;
  std::vector<Hypothesis> hypotheses;
  std::vector<Factor> factors;
  std::vector<PositivityCertificate> subs;
  std::vector<Word> chain;
  Presentation group;

  Word product() const;
};

struct CertificateReport {
  bool ok = false;
  bool equality = false;
  bool positive = false;
  std::string failure;  // "equality not established", "factors not positive: ...", ...
  std::string method;   // free, normal-form, relator-search
  std::size_t derivation_length = 0;
  bool replayable = false;
};

CertificateReport verify_certificate(const PositivityCertificate& cert, const Budget& budget = {});

}  // namespace lo
