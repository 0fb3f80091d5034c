#pragma once

#include <cstdint>
#include <string>

#include "rlr/envelope.hpp"
#include "rlr/lr_checks.hpp"
#include "rlr/report.hpp"

namespace rlr {

// Certifies that the z_i commute with every generator letter and with every
// ring generator in the full envelope.
Report verify_centrality(const LRPresentation& pres);

// (r x)^p = r^p x^p + (r x)^{p-1}(r) x in the full envelope, the two sides
// computed by independent paths: straightened powers against the closed
// formula through the coefficient ring.
Report verify_hochschild_in_envelope(const LRPresentation& pres, int trials,
                                     std::uint64_t seed);

// Desk-scale freeness certificate for the restricted envelope over a
// truncated ring: multiplying out all F_p-basis pairs never leaves the span
// of the p^rank truncated monomials.
struct ClosureCertificate {
  bool closed = true;
  long long basis_rank = 0;    // p^rank monomials over R
  long long fp_dimension = 0;  // times dim_Fp(R) = p^nvars
  std::string violation;
};

ClosureCertificate closure_certificate(const LRPresentation& pres);

// The restricted envelope as a target restricted structure: commutator
// bracket, associative p-th power, anchor read off against ring scalars.
// Used to certify that embedding the algebra into its restricted envelope
// commutes with the p-operation (checked from the basis, then re-verified
// on random elements).
struct EnvelopeTarget {
  const PolyEnvelope& env;
  using Element = PolyEnvelope::Element;

  Element zero() const { return env.zero(); }
  Element add(const Element& a, const Element& b) const { return env.add(a, b); }
  Element scale(const RingElement& r, const Element& a) const { return env.scale(r, a); }
  Element bracket(const Element& a, const Element& b) const { return env.commutator(a, b); }
  Element p_power(const Element& a) const { return env.power(a, env.prime()); }
  bool equal(const Element& a, const Element& b) const { return env.equal(a, b); }
  bool anchor_agrees(const Element& a, const Derivation& d) const {
    // [iota_L(a), iota_R(r)] = iota_R(eps(a)(r)) on every ring generator
    const RingSpec& ring = env.ops().pres.ring;
    for (int j = 0; j < ring.nvars; ++j) {
      Element lhs = env.commutator(a, env.scalar(RingElement::variable(ring, j)));
      Element rhs = env.scalar(d.image(j));
      if (!env.equal(lhs, rhs)) return false;
    }
    return true;
  }
  std::string to_string(const Element& a) const { return env.to_string(a); }
};

// iota_L : L -> u(R,L) is a restricted morphism; basis checks plus the
// random-element confirmation
Report verify_envelope_embedding(const LRPresentation& pres, int trials, std::uint64_t seed);

}  // namespace rlr
