#include "rlr/random_gen.hpp"

namespace rlr {

RingElement random_ring_element(SplitMix64& rng, const RingSpec& spec, int max_terms,
                                std::uint32_t max_exp) {
  std::uint32_t cap = spec.truncated ? std::min(max_exp, spec.p - 1) : max_exp;
  RingElement out(spec);
  int nterms = static_cast<int>(rng.below(max_terms + 1));
  for (int i = 0; i < nterms; ++i) {
    Exponents e(spec.nvars);
    for (int j = 0; j < spec.nvars; ++j) e[j] = static_cast<std::uint32_t>(rng.below(cap + 1));
    out.add_term(e, 1 + static_cast<long long>(rng.below(spec.p - 1)));
  }
  return out;
}

RingElement random_nonzero_ring_element(SplitMix64& rng, const RingSpec& spec, int max_terms,
                                        std::uint32_t max_exp) {
  for (int tries = 0; tries < 16; ++tries) {
    RingElement r = random_ring_element(rng, spec, max_terms, max_exp);
    if (!r.is_zero()) return r;
  }
  return RingElement::constant(spec, 1);
}

}  // namespace rlr
