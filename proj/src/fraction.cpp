#include "rlr/fraction.hpp"

#include <stdexcept>

namespace rlr {

Fraction::Fraction(RingElement num, RingElement den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.spec() == den_.spec())) throw std::invalid_argument("mixed-ring operands");
  if (num_.spec().truncated)
    throw std::invalid_argument("fractions are only defined over non-truncated rings");
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
}

Fraction Fraction::of(const RingElement& r) {
  return Fraction(r, RingElement::constant(r.spec(), 1));
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_); }

Fraction Fraction::operator+(const Fraction& o) const {
  return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
  return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
  return Fraction(num_ * o.num_, den_ * o.den_);
}

bool Fraction::operator==(const Fraction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string Fraction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const RingElement& r) {
    std::string s = r.to_string();
    return r.term_count() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + " / " + wrap(den_);
}

Fraction pow(const Fraction& a, std::uint32_t k) {
  return Fraction(pow(a.num(), k), pow(a.den(), k));
}

Fraction derivation_on_fraction(const Derivation& d, const Fraction& a) {
  return Fraction(derive(d, a.num()) * a.den() - a.num() * derive(d, a.den()),
                  a.den() * a.den());
}

}  // namespace rlr
