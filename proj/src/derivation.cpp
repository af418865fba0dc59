#include "lo/derivation.hpp"

#include <stdexcept>

namespace lo {

Word Derivation::replay(const Presentation& pres, const Word& start) const {
  Word w = start;
  for (const auto& st : steps) {
    if (st.relator < 0 || st.relator >= static_cast<int>(pres.relators.size()))
      throw std::out_of_range("derivation references a missing relator");
    Word r = pres.relators[static_cast<std::size_t>(st.relator)].pow(st.sign);
    w = r.conjugate_by(st.conjugator) * w;
  }
  return w;
}

Derivation compose(const Derivation& d1, const Derivation& d2) {
  Derivation out = d1;
  out.steps.insert(out.steps.end(), d2.steps.begin(), d2.steps.end());
  return out;
}

Derivation lift(const Derivation& d, const Word& p) {
  Derivation out;
  out.steps.reserve(d.steps.size());
  for (const auto& st : d.steps) out.steps.push_back({p * st.conjugator, st.relator, st.sign});
  return out;
}

Derivation reverse(const Derivation& d) {
  Derivation out;
  for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it)
    out.steps.push_back({it->conjugator, it->relator, -it->sign});
  return out;
}

}  // namespace lo
