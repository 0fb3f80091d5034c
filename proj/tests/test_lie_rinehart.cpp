#include "doctest.h"

#include <stdexcept>

#include "rlr/lie_rinehart.hpp"
#include "rlr/lr_checks.hpp"

using namespace rlr;

namespace {

RingElement pe(const RingSpec& spec, const char* text) {
  return parse_ring_element(spec, text);
}

// coordinate element r*D over a rank-1 presentation
LRElement rd(const LRPresentation& pres, const char* r) {
  LRElement e = lr_zero(pres);
  e.coords[0] = pe(pres.ring, r);
  return e;
}

// for derivation algebras, a^[p] is also computable through the anchor:
// expand (eps(a))^p back over the partials
LRElement p_power_via_derivations(const LRPresentation& pres, const LRElement& a) {
  Derivation dp = derivation_pth_power(lr_anchor(pres, a));
  LRElement out = lr_zero(pres);
  for (int k = 0; k < pres.rank; ++k) out.coords[k] = dp.image(k);
  return out;
}

}  // namespace

TEST_CASE("Witt bracket on the classic pairs") {
  LRPresentation witt = build_witt(3);
  CHECK(lr_eq(lr_bracket(witt, rd(witt, "1"), rd(witt, "t")), rd(witt, "1")));    // [D,tD]=D
  CHECK(lr_eq(lr_bracket(witt, rd(witt, "t"), rd(witt, "t^2")), rd(witt, "t^2")));
  SplitMix64 rng(3);
  for (int i = 0; i < 50; ++i) {
    LRElement a = random_lr_element(rng, witt);
    CHECK(lr_is_zero(lr_bracket(witt, a, a)));
  }
}

TEST_CASE("anchor is the R-linear extension of the stored derivations") {
  LRPresentation witt = build_witt(3);
  CHECK(lr_anchor(witt, rd(witt, "t")).image(0) == pe(witt.ring, "t"));
  CHECK(lr_anchor(witt, lr_zero(witt)).is_zero());
  CHECK(derive(lr_anchor(witt, rd(witt, "1 + t")), pe(witt.ring, "t^2")) ==
        pe(witt.ring, "2*t + 2*t^2"));
}

TEST_CASE("bracket is K-bilinear and obeys the anchor-Leibniz law") {
  LRPresentation alg = build_derivation_algebra(RingSpec(3, 2, true));
  SplitMix64 rng(5);
  for (int i = 0; i < 40; ++i) {
    LRElement a = random_lr_element(rng, alg);
    LRElement b = random_lr_element(rng, alg);
    LRElement c = random_lr_element(rng, alg);
    CHECK(lr_eq(lr_bracket(alg, lr_add(a, b), c),
                lr_add(lr_bracket(alg, a, c), lr_bracket(alg, b, c))));
    RingElement r = random_ring_element(rng, alg.ring);
    CHECK(lr_eq(lr_bracket(alg, a, lr_scale(r, b)),
                lr_add(lr_scale(r, lr_bracket(alg, a, b)),
                       lr_scale(derive(lr_anchor(alg, a), r), b))));
  }
}

TEST_CASE("lambda terms: p = 2 reduces to the bracket") {
  LRPresentation alg = build_derivation_algebra(RingSpec(2, 2, true));
  SplitMix64 rng(8);
  for (int i = 0; i < 30; ++i) {
    LRElement a = random_lr_element(rng, alg);
    LRElement b = random_lr_element(rng, alg);
    auto lams = lambda_terms(alg, a, b);
    REQUIRE(lams.size() == 1);
    CHECK(lr_eq(lams[0], lr_bracket(alg, a, b)));  // [b,a] = [a,b] in char 2
    for (const LRElement& lam : lambda_terms(alg, a, a)) CHECK(lr_is_zero(lam));
  }
}

TEST_CASE("lambda terms sum against the derivation-tower oracle") {
  LRPresentation witt = build_witt(3);
  LRElement a = rd(witt, "1");
  LRElement b = rd(witt, "t");
  LRElement sum = lr_zero(witt);
  for (const LRElement& lam : lambda_terms(witt, a, b)) sum = lr_add(sum, lam);
  LRElement rhs = lr_sub(lr_sub(p_power_via_derivations(witt, lr_add(a, b)),
                                p_power_via_derivations(witt, a)),
                         p_power_via_derivations(witt, b));
  CHECK(lr_eq(sum, rhs));
  CHECK(lr_eq(sum, rd(witt, "1")));  // hand expansion of ad(Ta+b)^2(a)
}

TEST_CASE("p-th powers in the Witt algebra") {
  LRPresentation witt = build_witt(3);
  CHECK(lr_is_zero(lr_p_power(witt, rd(witt, "1"))));            // D^[3] = 0
  CHECK(lr_eq(lr_p_power(witt, rd(witt, "t")), rd(witt, "t")));  // (tD)^[3] = tD
  CHECK(lr_eq(lr_p_power(witt, rd(witt, "1 + t")), rd(witt, "1 + t")));
  // independent oracle through derivation_pth_power
  SplitMix64 rng(13);
  for (int i = 0; i < 60; ++i) {
    LRElement a = random_lr_element(rng, witt);
    CHECK(lr_eq(lr_p_power(witt, a), p_power_via_derivations(witt, a)));
  }
}

TEST_CASE("p-th power scalar law and split-order independence") {
  for (std::uint32_t p : {2u, 3u}) {
    LRPresentation alg = build_derivation_algebra(RingSpec(p, 2, true));
    SplitMix64 rng(p * 31);
    for (int i = 0; i < 30; ++i) {
      LRElement a = random_lr_element(rng, alg);
      Residue lam = static_cast<Residue>(rng.below(p));
      CHECK(lr_eq(lr_p_power(alg, lr_scale_residue(lam, a)),
                  lr_scale_residue(pow_mod(lam, p, p), lr_p_power(alg, a))));
      CHECK(lr_eq(lr_p_power_ordered(alg, a, {1, 0}), lr_p_power(alg, a)));
      // operator form of the ad compatibility
      LRElement b = random_lr_element(rng, alg);
      LRElement ad = b;
      for (std::uint32_t k = 0; k < p; ++k) ad = lr_bracket(alg, a, ad);
      CHECK(lr_eq(lr_bracket(alg, lr_p_power(alg, a), b), ad));
    }
  }
}

TEST_CASE("derivation algebras over truncated rings") {
  LRPresentation w3 = build_witt(3);
  CHECK(w3.rank == 1);
  for (int k = 0; k < w3.rank; ++k) CHECK(w3.pop_img[0][k].is_zero());

  LRPresentation d22 = build_derivation_algebra(RingSpec(2, 2, true));
  CHECK(d22.rank == 2);
  for (int k = 0; k < 2; ++k) {
    CHECK(d22.bracket_sc[0][1][k].is_zero());
    CHECK(d22.pop_img[0][k].is_zero());
    CHECK(d22.pop_img[1][k].is_zero());
  }
}

TEST_CASE("axiom suite passes on the stock algebras") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    CHECK(verify_axioms(build_witt(p), 15, 42).all_passed());
    CHECK(verify_axioms(build_derivation_algebra(RingSpec(p, 2, true)), 10, 42).all_passed());
    CHECK(verify_axioms(build_abelian(RingSpec(p, 1, true), 3), 10, 42).all_passed());
  }
  // non-truncated coefficients as well
  CHECK(verify_axioms(build_derivation_algebra(RingSpec(3, 1, false)), 15, 42).all_passed());
}

TEST_CASE("abelian rank-1 with zero p-map") {
  RingSpec ring(3, 1, true);
  LRPresentation pres = LRPresentation::empty(ring, 1);
  CHECK(verify_axioms(pres, 20, 42).all_passed());
  SplitMix64 rng(17);
  for (int i = 0; i < 20; ++i)
    CHECK(lr_is_zero(lr_p_power(pres, random_lr_element(rng, pres))));
}

TEST_CASE("fault injection: broken Jacobi constants") {
  RingSpec ring(3, 1, true);
  LRPresentation pres = LRPresentation::empty(ring, 3);
  // [x1,x2] = x3 and [x1,x3] = x1 fail Jacobi on the basis triple
  pres.set_bracket(0, 1, 2, RingElement::constant(ring, 1));
  pres.set_bracket(0, 2, 0, RingElement::constant(ring, 1));
  Report rep = verify_axioms(pres, 10, 42);
  CHECK_FALSE(rep.all_passed());
  for (const CheckResult& c : rep.checks)
    if (c.name == "jacobi") CHECK_FALSE(c.passed);
}

TEST_CASE("fault injection: anchor that is no Lie map") {
  LRPresentation pres = build_derivation_algebra(RingSpec(3, 2, true));
  // eps(x1) := t2 d/dt1 while the bracket table still says [x1,x2] = 0
  pres.anchor_img[0] = scale(RingElement::variable(pres.ring, 1), pres.anchor_img[0]);
  Report rep = verify_axioms(pres, 10, 42);
  CHECK_FALSE(rep.all_passed());
  for (const CheckResult& c : rep.checks)
    if (c.name == "anchor-lie-map") CHECK_FALSE(c.passed);
}

TEST_CASE("fault injection: corrupted p-operation image") {
  LRPresentation pres = build_witt(3);
  pres.pop_img[0][0] = RingElement::constant(pres.ring, 1);  // D^[3] := D
  Report rep = verify_axioms(pres, 10, 42);
  CHECK_FALSE(rep.all_passed());
  bool ad_failed = false, anchor_failed = false;
  for (const CheckResult& c : rep.checks) {
    if (c.name == "ad-p-power") ad_failed = !c.passed;
    if (c.name == "anchor-p-power") anchor_failed = !c.passed;
  }
  CHECK(ad_failed);
  CHECK(anchor_failed);
}

TEST_CASE("identity is a restricted morphism; scaling by t is not") {
  LRPresentation witt = build_witt(3);
  std::vector<LRElement> identity{lr_basis(witt, 0)};
  CHECK(verify_restricted_morphism(witt, identity, LRTarget{witt}, 30, 42).all_passed());

  std::vector<LRElement> by_t{rd(witt, "t")};
  Report rep = verify_restricted_morphism(witt, by_t, LRTarget{witt}, 30, 42);
  CHECK_FALSE(rep.all_passed());
  for (const CheckResult& c : rep.checks)
    if (c.name == "morphism-bracket") CHECK_FALSE(c.passed);
}

TEST_CASE("the span of tD embeds as a restricted subalgebra") {
  LRPresentation witt = build_witt(3);
  const RingSpec& ring = witt.ring;
  // L' = R y with eps'(y) = t d/dt and y^[3] = y
  LRPresentation sub = LRPresentation::empty(ring, 1);
  sub.anchor_img[0] = Derivation(ring, {pe(ring, "t")});
  sub.pop_img[0][0] = RingElement::constant(ring, 1);
  CHECK(verify_axioms(sub, 20, 42).all_passed());

  std::vector<LRElement> inclusion{rd(witt, "t")};  // y -> tD
  Report rep = verify_restricted_morphism(sub, inclusion, LRTarget{witt}, 100, 42);
  CHECK(rep.all_passed());
}

TEST_CASE("reports are rendered deterministically") {
  LRPresentation witt = build_witt(3);
  Report a = verify_axioms(witt, 10, 7);
  Report b = verify_axioms(witt, 10, 7);
  CHECK(a.render() == b.render());
  CHECK(a.render().find("check: jacobi") != std::string::npos);
}

TEST_CASE("golden report text") {
  const char* golden =
      "suite: verify\n"
      "subject: p=3 nvars=1 truncated=true rank=1\n"
      "seed: 7\n"
      "check: jacobi\n"
      "  status: pass\n"
      "  trials: 6\n"
      "check: anchor-lie-map\n"
      "  status: pass\n"
      "  trials: 6\n"
      "check: anchor-leibniz\n"
      "  status: pass\n"
      "  trials: 5\n"
      "check: ad-p-power\n"
      "  status: pass\n"
      "  trials: 5\n"
      "check: p-additivity\n"
      "  status: pass\n"
      "  trials: 5\n"
      "check: hochschild-scalar\n"
      "  status: pass\n"
      "  trials: 5\n"
      "check: anchor-p-power\n"
      "  status: pass\n"
      "  trials: 5\n"
      "result: pass\n";
  CHECK(verify_axioms(build_witt(3), 5, 7).render() == golden);
}
