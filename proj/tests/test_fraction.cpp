#include "doctest.h"
#include <stdexcept>
#include "rlr/fraction.hpp"
#include "rlr/random_gen.hpp"

using namespace rlr;

namespace {

RingSpec spec3() { return RingSpec(3, 1, false); }

RingElement pe(const RingSpec& spec, const char* text) {
  return parse_ring_element(spec, text);
}

Fraction random_fraction(SplitMix64& rng, const RingSpec& spec) {
  return Fraction(random_ring_element(rng, spec), random_nonzero_ring_element(rng, spec));
}

}  // namespace

TEST_CASE("cross-multiplication equality") {
  RingSpec s = spec3();
  CHECK(Fraction(pe(s, "t"), pe(s, "t^2")) == Fraction(pe(s, "1"), pe(s, "t")));
  CHECK(Fraction(pe(s, "1"), pe(s, "t")) * Fraction(pe(s, "t^2"), pe(s, "1")) ==
        Fraction::of(pe(s, "t")));
  CHECK_FALSE(Fraction(pe(s, "1"), pe(s, "t")) == Fraction(pe(s, "2"), pe(s, "t")));
}

TEST_CASE("char-p addition of fractions") {
  RingSpec s = spec3();
  Fraction sum = Fraction(pe(s, "1"), pe(s, "t")) + Fraction(pe(s, "2"), pe(s, "t"));
  CHECK(sum.is_zero());
  CHECK(sum == Fraction::zero(s));
}

TEST_CASE("zero denominators and truncated rings are rejected") {
  RingSpec s = spec3();
  CHECK_THROWS_AS(Fraction(pe(s, "1"), RingElement::zero(s)), std::invalid_argument);
  RingSpec trunc(3, 1, true);
  CHECK_THROWS_AS(Fraction(RingElement::constant(trunc, 1), RingElement::constant(trunc, 1)),
                  std::invalid_argument);
}

TEST_CASE("fraction equality is a congruence for + and *") {
  RingSpec s(3, 2, false);
  SplitMix64 rng(21);
  for (int i = 0; i < 100; ++i) {
    Fraction a = random_fraction(rng, s);
    Fraction c = random_fraction(rng, s);
    // b ~ a and d ~ c by amplification
    RingElement u = random_nonzero_ring_element(rng, s);
    RingElement v = random_nonzero_ring_element(rng, s);
    Fraction b(a.num() * u, a.den() * u);
    Fraction d(c.num() * v, c.den() * v);
    CHECK(a == b);
    CHECK(c == d);
    CHECK(a + c == b + d);
    CHECK(a * c == b * d);
    CHECK(a - a == Fraction::zero(s));
  }
}

TEST_CASE("quotient rule") {
  RingSpec s = spec3();
  Derivation d = Derivation::partial(s, 0);
  // d(1/t) = -1/t^2 = 2/t^2
  CHECK(derivation_on_fraction(d, Fraction(pe(s, "1"), pe(s, "t"))) ==
        Fraction(pe(s, "2"), pe(s, "t^2")));
  // d(s/s) = 0
  CHECK(derivation_on_fraction(d, Fraction(pe(s, "t^2"), pe(s, "t^2"))).is_zero());
}

TEST_CASE("quotient rule restricted to denominator 1 is derive") {
  RingSpec s(3, 2, false);
  SplitMix64 rng(22);
  for (int i = 0; i < 100; ++i) {
    RingElement r = random_ring_element(rng, s);
    std::vector<RingElement> images;
    for (int j = 0; j < s.nvars; ++j) images.push_back(random_ring_element(rng, s));
    Derivation d(s, std::move(images));
    CHECK(derivation_on_fraction(d, Fraction::of(r)) == Fraction::of(derive(d, r)));
  }
}

TEST_CASE("fraction printing") {
  RingSpec s = spec3();
  CHECK(Fraction(pe(s, "1"), pe(s, "t")).to_string() == "1 / t");
  CHECK(Fraction(pe(s, "1 + t"), pe(s, "t^2")).to_string() == "(t + 1) / t^2");
  CHECK(Fraction::of(pe(s, "t")).to_string() == "t");
}
