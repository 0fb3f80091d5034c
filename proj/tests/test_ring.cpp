#include "doctest.h"
#include <stdexcept>
#include "rlr/random_gen.hpp"
#include "rlr/ring.hpp"

using namespace rlr;

namespace {

RingElement pe(const RingSpec& spec, const char* text) {
  return parse_ring_element(spec, text);
}

}  // namespace

TEST_CASE("truncated cube of 1+t collapses to 1") {
  RingSpec spec(3, 1, true);
  RingElement a = pe(spec, "1 + t");
  CHECK(a * a * a == RingElement::constant(spec, 1));
}

TEST_CASE("freshman's dream in F_3[t]") {
  RingSpec spec(3, 1, false);
  RingElement a = pe(spec, "1 + t");
  CHECK(a * a * a == pe(spec, "1 + t^3"));
  CHECK(pow(a, 3) == pe(spec, "t^3 + 1"));
}

TEST_CASE("additive inverses cancel") {
  RingSpec spec(5, 2, false);
  SplitMix64 rng(7);
  for (int i = 0; i < 50; ++i) {
    RingElement a = random_ring_element(rng, spec, 3, 3);
    CHECK((a + (-a)).is_zero());
  }
}

TEST_CASE("frobenius on variables and binomials") {
  RingSpec poly(3, 1, false);
  CHECK(frobenius(pe(poly, "t")) == pe(poly, "t^3"));
  CHECK(frobenius(pe(poly, "1 + t")) == pe(poly, "1 + t^3"));

  RingSpec trunc(3, 1, true);
  CHECK(frobenius(pe(trunc, "t")).is_zero());

  RingSpec two(2, 2, false);
  CHECK(frobenius(pe(two, "t1 + t2")) == pe(two, "t1^2 + t2^2"));
}

TEST_CASE("frobenius is a ring endomorphism and matches p-th powers") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (bool truncated : {false, true}) {
      RingSpec spec(p, 2, truncated);
      SplitMix64 rng(1000 + p + (truncated ? 1 : 0));
      for (int i = 0; i < 100; ++i) {
        RingElement a = random_ring_element(rng, spec, 3, 3);
        RingElement b = random_ring_element(rng, spec, 3, 3);
        CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
        CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
        // independent oracle: the actual p-th power
        CHECK(frobenius(a) == pow(a, p));
      }
    }
  }
}

TEST_CASE("mixed-ring operands are rejected") {
  RingSpec a(3, 1, false);
  RingSpec b(3, 1, true);
  CHECK_THROWS_AS(RingElement::constant(a, 1) + RingElement::constant(b, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(RingElement::constant(a, 1) * RingElement::constant(RingSpec(5, 1, false), 1),
                  std::invalid_argument);
}

TEST_CASE("canonical form stores no zero terms and respects truncation") {
  RingSpec spec(3, 1, true);
  RingElement a = pe(spec, "2*t + t");  // 3t = 0
  CHECK(a.is_zero());
  CHECK(pe(spec, "t^3").is_zero());
  CHECK(pe(spec, "t^2").term_count() == 1);
}

TEST_CASE("printing follows the canonical graded order") {
  RingSpec spec(3, 2, false);
  CHECK(pe(spec, "1 + 2*t1^2*t2").to_string() == "2*t1^2*t2 + 1");
  CHECK(pe(spec, "t2 + t1").to_string() == "t1 + t2");
  CHECK(pe(spec, "t1*t2^2 + t1^2*t2").to_string() == "t1^2*t2 + t1*t2^2");
  CHECK(RingElement::zero(spec).to_string() == "0");

  RingSpec one(3, 1, false);
  CHECK(pe(one, "t + 1 + 2*t^2").to_string() == "2*t^2 + t + 1");
}

TEST_CASE("parse and print round-trip") {
  RingSpec spec(5, 2, false);
  SplitMix64 rng(99);
  for (int i = 0; i < 100; ++i) {
    RingElement a = random_ring_element(rng, spec, 4, 4);
    CHECK(parse_ring_element(spec, a.to_string()) == a);
  }
}

TEST_CASE("parser diagnostics") {
  RingSpec spec(3, 2, false);
  CHECK_THROWS_AS(pe(spec, "t3"), std::invalid_argument);   // index out of range
  CHECK_THROWS_AS(pe(spec, "t1 +"), std::invalid_argument);  // dangling plus
  CHECK_THROWS_AS(pe(spec, "w"), std::invalid_argument);
  CHECK_THROWS_AS(RingSpec(4, 1, false), std::invalid_argument);  // p must be prime
}
