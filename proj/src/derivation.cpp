#include "rlr/derivation.hpp"

#include <stdexcept>

namespace rlr {

Derivation::Derivation(const RingSpec& spec, std::vector<RingElement> images)
    : spec_(spec), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != spec_.nvars)
    throw std::invalid_argument("derivation needs one image per ring generator");
  for (const RingElement& im : images_)
    if (!(im.spec() == spec_)) throw std::invalid_argument("derivation image in wrong ring");
}

Derivation Derivation::zero(const RingSpec& spec) {
  return Derivation(spec, std::vector<RingElement>(spec.nvars, RingElement::zero(spec)));
}

Derivation Derivation::partial(const RingSpec& spec, int j) {
  std::vector<RingElement> images(spec.nvars, RingElement::zero(spec));
  images[j] = RingElement::constant(spec, 1);
  return Derivation(spec, std::move(images));
}

bool Derivation::is_zero() const {
  for (const RingElement& im : images_)
    if (!im.is_zero()) return false;
  return true;
}

Derivation Derivation::operator+(const Derivation& o) const {
  std::vector<RingElement> images;
  images.reserve(images_.size());
  for (int j = 0; j < spec_.nvars; ++j) images.push_back(images_[j] + o.images_[j]);
  return Derivation(spec_, std::move(images));
}

Derivation Derivation::operator-(const Derivation& o) const {
  std::vector<RingElement> images;
  images.reserve(images_.size());
  for (int j = 0; j < spec_.nvars; ++j) images.push_back(images_[j] - o.images_[j]);
  return Derivation(spec_, std::move(images));
}

std::string Derivation::to_string() const {
  std::string out;
  for (int j = 0; j < spec_.nvars; ++j) {
    if (!out.empty()) out += ", ";
    out += spec_.var_name(j) + " -> " + images_[j].to_string();
  }
  return out.empty() ? "(constants only)" : out;
}

Derivation scale(const RingElement& r, const Derivation& d) {
  std::vector<RingElement> images;
  images.reserve(d.images().size());
  for (const RingElement& im : d.images()) images.push_back(r * im);
  return Derivation(d.spec(), std::move(images));
}

RingElement derive(const Derivation& d, const RingElement& r) {
  const RingSpec& spec = r.spec();
  if (!(spec == d.spec())) throw std::invalid_argument("mixed-ring operands");
  RingElement out(spec);
  Exponents e(spec.nvars);
  for (const auto& [exp, c] : r.terms()) {
    for (int j = 0; j < spec.nvars; ++j) {
      if (exp[j] == 0) continue;
      Residue k = reduce_mod(exp[j], spec.p);
      if (k == 0) continue;
      e = exp;
      e[j] -= 1;
      out += RingElement::monomial(spec, e, mul_mod(c, k, spec.p)) * d.image(j);
    }
  }
  return out;
}

RingElement derive_iter(const Derivation& d, int k, const RingElement& r) {
  RingElement out = r;
  for (int i = 0; i < k; ++i) out = derive(d, out);
  return out;
}

Derivation derivation_bracket(const Derivation& d1, const Derivation& d2) {
  if (!(d1.spec() == d2.spec())) throw std::invalid_argument("mixed-ring operands");
  std::vector<RingElement> images;
  images.reserve(d1.images().size());
  for (int j = 0; j < d1.spec().nvars; ++j)
    images.push_back(derive(d1, d2.image(j)) - derive(d2, d1.image(j)));
  return Derivation(d1.spec(), std::move(images));
}

Derivation derivation_pth_power(const Derivation& d) {
  const RingSpec& spec = d.spec();
  std::vector<RingElement> images;
  images.reserve(spec.nvars);
  for (int j = 0; j < spec.nvars; ++j)
    images.push_back(derive_iter(d, static_cast<int>(spec.p), RingElement::variable(spec, j)));
  return Derivation(spec, std::move(images));
}

}  // namespace rlr
