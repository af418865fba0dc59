#include "lo/certificate.hpp"

namespace lo {

const char* to_string(Justification::Kind k) {
  switch (k) {
    case Justification::Kind::Hypothesis: return "hypothesis";
    case Justification::Kind::InverseOfNegative: return "inverse-of-negative";
    case Justification::Kind::SubCertificate: return "sub-certificate";
  }
  return "?";
}

Word PositivityCertificate::product() const {
  Word out;
  for (const auto& f : factors)
    for (int r = 0; r < f.repeat; ++r) out *= f.word;
  return out;
}

namespace {

bool same_element(const Word& u, const Word& v, const Presentation& pres, const Budget& budget) {
  return u == v || equal_in_group(u, v, pres, budget).equal();
}

bool has_hypothesis(const std::vector<Hypothesis>& hs, const Hypothesis& h) {
  for (const auto& x : hs)
    if (x.word == h.word && x.sign == h.sign) return true;
  return false;
}

std::string positivity_failure(const PositivityCertificate& cert, const Budget& budget) {
  if (cert.factors.empty()) return "no factors";
  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    const auto& f = cert.factors[i];
    const std::string where = "factor " + std::to_string(i) + " (" + f.word.str() + ")";
    if (f.repeat < 1) return where + " has a non-positive repeat count";
    if (f.word.empty()) return where + " is the identity";
    const int idx = f.why.index;
    switch (f.why.kind) {
      case Justification::Kind::Hypothesis: {
        if (idx < 0 || static_cast<std::size_t>(idx) >= cert.hypotheses.size()) return where + ": bad hypothesis index";
        const auto& h = cert.hypotheses[static_cast<std::size_t>(idx)];
        if (h.sign != 1) return where + ": cited hypothesis is negative";
        if (!same_element(f.word, h.word, cert.group, budget)) return where + ": differs from the cited hypothesis";
        break;
      }
      case Justification::Kind::InverseOfNegative: {
        if (idx < 0 || static_cast<std::size_t>(idx) >= cert.hypotheses.size()) return where + ": bad hypothesis index";
        const auto& h = cert.hypotheses[static_cast<std::size_t>(idx)];
        if (h.sign != -1) return where + ": cited hypothesis is positive";
        if (!same_element(f.word, h.word.inverse(), cert.group, budget))
          return where + ": not the inverse of the cited hypothesis";
        break;
      }
      case Justification::Kind::SubCertificate: {
        if (idx < 0 || static_cast<std::size_t>(idx) >= cert.subs.size()) return where + ": bad sub-certificate index";
        const auto& sub = cert.subs[static_cast<std::size_t>(idx)];
        for (const auto& h : sub.hypotheses)
          if (!has_hypothesis(cert.hypotheses, h)) return where + ": sub-certificate uses an extra hypothesis";
        if (!same_element(f.word, sub.target, cert.group, budget)) return where + ": differs from the sub-certificate target";
        auto r = verify_certificate(sub, budget);
        if (!r.ok) return where + ": sub-certificate fails (" + r.failure + ")";
        break;
      }
    }
  }
  return {};
}

}  // namespace

CertificateReport verify_certificate(const PositivityCertificate& cert, const Budget& budget) {
  CertificateReport rep;
  std::string why = positivity_failure(cert, budget);
  rep.positive = why.empty();
  std::vector<Word> links{cert.target};
  links.insert(links.end(), cert.chain.begin(), cert.chain.end());
  links.push_back(cert.product());
  auto chain = prove_chain(links, cert.group, budget);
  rep.equality = chain.ok;
  if (chain.ok) {
    rep.replayable = chain.replayable && chain.derivation.proves_equal(cert.group, cert.target, links.back());
    rep.derivation_length = chain.derivation.size();
    if (cert.group.torus) {
      rep.method = "normal-form";
    } else if (chain.derivation.size() == 0) {
      rep.method = "free";
    } else {
      rep.method = "relator-search";
    }
  }
  if (!rep.equality) {
    auto v = equal_in_group(links[chain.failed_link], links[chain.failed_link + 1], cert.group, budget);
    rep.failure = v.kind == Verdict::Distinct ? "factor product differs from the target (link " +
                                                    std::to_string(chain.failed_link) + ")"
                                              : "equality not established (link " +
                                                    std::to_string(chain.failed_link) + ")";
  } else if (!rep.positive) {
    rep.failure = "factors not positive: " + why;
  }
  rep.ok = rep.equality && rep.positive;
  return rep;
}

}  // namespace lo
