#pragma once

#include <cstdint>
#include <vector>

#include "rlr/lie_rinehart.hpp"
#include "rlr/report.hpp"

namespace rlr {

// Machine verification of the restricted Lie-Rinehart axioms on a
// presentation.  Each axiom is checked on the stored constants where that
// set is finite and on `trials` random elements otherwise:
//   jacobi             Jacobi identity for the bracket
//   anchor-lie-map     eps([a,b]) = [eps(a), eps(b)]
//   anchor-leibniz     [a, r b] = r [a,b] + eps(a)(r) b
//   ad-p-power         [a^[p], b] = ad(a)^p(b)
//   p-additivity       (a+b)^[p] = a^[p] + b^[p] + sum lambda_i(a,b)
//   hochschild-scalar  (r a)^[p] = r^p a^[p] + (eps(r a))^{p-1}(r) a
//   anchor-p-power     eps(a^[p]) = eps(a)^p as derivations
// Failures are report entries carrying the first counterexample.
Report verify_axioms(const LRPresentation& pres, int trials, std::uint64_t seed);

// Restricted-morphism certificate: given the images of the source basis in
// a target restricted structure, checks that the induced R-linear map is a
// morphism of Lie-Rinehart algebras (random pairs + anchor agreement), that
// it commutes with the p-operation on the basis alone, and then re-verifies
// the p-operation compatibility on random non-basis elements r*x_i and
// random sums -- the content of the generator lemma.
//
// Target must provide:
//   Element, zero(), add(a,b), scale(const RingElement&, a), bracket(a,b),
//   p_power(a), equal(a,b), anchor_agrees(a, const Derivation&),
//   to_string(a)
template <class Target>
Report verify_restricted_morphism(const LRPresentation& src,
                                  const std::vector<typename Target::Element>& basis_images,
                                  const Target& target, int trials, std::uint64_t seed) {
  using Element = typename Target::Element;
  Report rep;
  rep.suite = "verify-morphism";
  rep.subject = src.describe();
  rep.seed = seed;

  auto apply = [&](const LRElement& a) {
    Element out = target.zero();
    for (int i = 0; i < src.rank; ++i)
      if (!a.coords[i].is_zero()) out = target.add(out, target.scale(a.coords[i], basis_images[i]));
    return out;
  };

  {
    CheckResult& c = rep.add_check("morphism-bracket");
    SplitMix64 rng = seeded_for(seed, "morphism-bracket");
    for (int t = 0; t < trials; ++t) {
      ++c.trials;
      LRElement a = random_lr_element(rng, src);
      LRElement b = random_lr_element(rng, src);
      Element lhs = apply(lr_bracket(src, a, b));
      Element rhs = target.bracket(apply(a), apply(b));
      if (!target.equal(lhs, rhs)) {
        c.fail({{"a", lr_to_string(src, a)},
                {"b", lr_to_string(src, b)},
                {"lhs", target.to_string(lhs)},
                {"rhs", target.to_string(rhs)}});
        break;
      }
    }
  }

  {
    CheckResult& c = rep.add_check("morphism-anchor");
    SplitMix64 rng = seeded_for(seed, "morphism-anchor");
    for (int t = 0; t < trials; ++t) {
      ++c.trials;
      LRElement a = random_lr_element(rng, src);
      if (!target.anchor_agrees(apply(a), lr_anchor(src, a))) {
        c.fail({{"a", lr_to_string(src, a)}});
        break;
      }
    }
  }

  {
    CheckResult& c = rep.add_check("restricted-on-basis");
    for (int i = 0; i < src.rank; ++i) {
      ++c.trials;
      Element lhs = apply(lr_p_power(src, lr_basis(src, i)));
      Element rhs = target.p_power(apply(lr_basis(src, i)));
      if (!target.equal(lhs, rhs)) {
        c.fail({{"basis", src.basis_name(i)},
                {"lhs", target.to_string(lhs)},
                {"rhs", target.to_string(rhs)}});
        break;
      }
    }
  }

  {
    CheckResult& c = rep.add_check("restricted-on-random");
    SplitMix64 rng = seeded_for(seed, "restricted-on-random");
    for (int t = 0; t < trials; ++t) {
      ++c.trials;
      LRElement a;
      if (t % 2 == 0 && src.rank > 0) {
        // scaled basis element r*x_i
        a = lr_scale(random_ring_element(rng, src.ring),
                     lr_basis(src, static_cast<int>(rng.below(src.rank))));
      } else {
        a = random_lr_element(rng, src);
      }
      Element lhs = apply(lr_p_power(src, a));
      Element rhs = target.p_power(apply(a));
      if (!target.equal(lhs, rhs)) {
        c.fail({{"a", lr_to_string(src, a)},
                {"lhs", target.to_string(lhs)},
                {"rhs", target.to_string(rhs)}});
        break;
      }
    }
  }

  return rep;
}

// Target adapter for a plain presentation (morphisms L -> L')
struct LRTarget {
  const LRPresentation& pres;
  using Element = LRElement;
  Element zero() const { return lr_zero(pres); }
  Element add(const Element& a, const Element& b) const { return lr_add(a, b); }
  Element scale(const RingElement& r, const Element& a) const { return lr_scale(r, a); }
  Element bracket(const Element& a, const Element& b) const { return lr_bracket(pres, a, b); }
  Element p_power(const Element& a) const { return lr_p_power(pres, a); }
  bool equal(const Element& a, const Element& b) const { return lr_eq(a, b); }
  bool anchor_agrees(const Element& a, const Derivation& d) const {
    return lr_anchor(pres, a) == d;
  }
  std::string to_string(const Element& a) const { return lr_to_string(pres, a); }
};

}  // namespace rlr
