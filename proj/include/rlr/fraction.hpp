#pragma once

#include <string>

#include "rlr/derivation.hpp"
#include "rlr/ring.hpp"

namespace rlr {

// num/den over a non-truncated polynomial ring (an integral domain).
// Fractions are never reduced to lowest terms; equality is semantic, by
// cross multiplication.
class Fraction {
 public:
  Fraction(RingElement num, RingElement den);

  static Fraction of(const RingElement& r);  // r/1
  static Fraction zero(const RingSpec& spec) { return of(RingElement::zero(spec)); }
  static Fraction one(const RingSpec& spec) { return of(RingElement::constant(spec, 1)); }

  const RingElement& num() const { return num_; }
  const RingElement& den() const { return den_; }
  const RingSpec& spec() const { return num_.spec(); }
  bool is_zero() const { return num_.is_zero(); }
  bool den_is_one() const { return den_.is_one(); }

  Fraction operator-() const;
  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  bool operator==(const Fraction& o) const;

  std::string to_string() const;

 private:
  RingElement num_;
  RingElement den_;
};

inline bool fraction_eq(const Fraction& a, const Fraction& b) { return a == b; }

Fraction pow(const Fraction& a, std::uint32_t k);

// quotient rule: d(r/s) = (d(r)*s - r*d(s)) / s^2
Fraction derivation_on_fraction(const Derivation& d, const Fraction& a);

}  // namespace rlr
