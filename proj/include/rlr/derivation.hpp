#pragma once

#include <string>
#include <vector>

#include "rlr/ring.hpp"

namespace rlr {

// K-linear derivation of the coefficient ring, stored by its images on the
// ring generators and extended everywhere else by the Leibniz rule.  The
// extension descends to the truncated quotient since d(t_j^p) = p t_j^{p-1}
// d(t_j) = 0 in characteristic p.
class Derivation {
 public:
  Derivation(const RingSpec& spec, std::vector<RingElement> images);

  static Derivation zero(const RingSpec& spec);
  static Derivation partial(const RingSpec& spec, int j);  // d/dt_j

  const RingSpec& spec() const { return spec_; }
  const RingElement& image(int j) const { return images_[j]; }
  const std::vector<RingElement>& images() const { return images_; }
  bool is_zero() const;

  bool operator==(const Derivation& o) const { return images_ == o.images_; }

  Derivation operator+(const Derivation& o) const;
  Derivation operator-(const Derivation& o) const;

  std::string to_string() const;

 private:
  RingSpec spec_;
  std::vector<RingElement> images_;
};

// scale by a ring element: (r*d)(x) = r*d(x)
Derivation scale(const RingElement& r, const Derivation& d);

RingElement derive(const Derivation& d, const RingElement& r);
RingElement derive_iter(const Derivation& d, int k, const RingElement& r);

// commutator d1 d2 - d2 d1, a derivation with the composed images on the
// generators
Derivation derivation_bracket(const Derivation& d1, const Derivation& d2);

// d^p, again a derivation in characteristic p; images are derive_iter(d, p, t_j)
Derivation derivation_pth_power(const Derivation& d);

}  // namespace rlr
