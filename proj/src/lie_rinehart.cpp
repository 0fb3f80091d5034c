#include "rlr/lie_rinehart.hpp"

#include <stdexcept>

#include "rlr/jacobson.hpp"

namespace rlr {

LRPresentation LRPresentation::empty(const RingSpec& ring, int rank) {
  if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
  LRPresentation pres;
  pres.ring = ring;
  pres.rank = rank;
  RingElement z = RingElement::zero(ring);
  pres.bracket_sc.assign(
      rank, std::vector<std::vector<RingElement>>(rank, std::vector<RingElement>(rank, z)));
  pres.anchor_img.assign(rank, Derivation::zero(ring));
  pres.pop_img.assign(rank, std::vector<RingElement>(rank, z));
  return pres;
}

void LRPresentation::set_bracket(int i, int j, int k, const RingElement& c) {
  bracket_sc[i][j][k] = c;
  bracket_sc[j][i][k] = -c;
}

void LRPresentation::check_shape() const {
  if (static_cast<int>(bracket_sc.size()) != rank ||
      static_cast<int>(anchor_img.size()) != rank ||
      static_cast<int>(pop_img.size()) != rank)
    throw std::invalid_argument("presentation tables do not match rank");
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(bracket_sc[i].size()) != rank ||
        static_cast<int>(pop_img[i].size()) != rank)
      throw std::invalid_argument("presentation tables do not match rank");
    for (int j = 0; j < rank; ++j) {
      if (static_cast<int>(bracket_sc[i][j].size()) != rank)
        throw std::invalid_argument("presentation tables do not match rank");
      for (int k = 0; k < rank; ++k) {
        if (!(bracket_sc[i][j][k] == -bracket_sc[j][i][k]))
          throw std::invalid_argument("bracket constants are not antisymmetric");
        if (i == j && !bracket_sc[i][j][k].is_zero())
          throw std::invalid_argument("bracket constants must be alternating");
      }
    }
  }
}

bool LRPresentation::operator==(const LRPresentation& o) const {
  return ring == o.ring && rank == o.rank && bracket_sc == o.bracket_sc &&
         anchor_img == o.anchor_img && pop_img == o.pop_img;
}

std::string LRPresentation::basis_name(int i) const {
  if (rank == 1) return "D";
  return "x" + std::to_string(i + 1);
}

std::string LRPresentation::describe() const {
  return "p=" + std::to_string(ring.p) + " nvars=" + std::to_string(ring.nvars) +
         " truncated=" + (ring.truncated ? "true" : "false") +
         " rank=" + std::to_string(rank);
}

LRElement lr_zero(const LRPresentation& pres) {
  return LRElement{std::vector<RingElement>(pres.rank, RingElement::zero(pres.ring))};
}

LRElement lr_basis(const LRPresentation& pres, int i) {
  LRElement e = lr_zero(pres);
  e.coords[i] = RingElement::constant(pres.ring, 1);
  return e;
}

LRElement lr_add(const LRElement& a, const LRElement& b) {
  LRElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

LRElement lr_sub(const LRElement& a, const LRElement& b) {
  LRElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

LRElement lr_neg(const LRElement& a) {
  LRElement out = a;
  for (auto& c : out.coords) c = -c;
  return out;
}

LRElement lr_scale(const RingElement& r, const LRElement& a) {
  LRElement out = a;
  for (auto& c : out.coords) c = r * c;
  return out;
}

LRElement lr_scale_residue(Residue c, const LRElement& a) {
  if (a.coords.empty()) return a;
  return lr_scale(RingElement::constant(a.coords[0].spec(), c), a);
}

bool lr_eq(const LRElement& a, const LRElement& b) {
  if (a.coords.size() != b.coords.size()) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (!(a.coords[i] == b.coords[i])) return false;
  return true;
}

bool lr_is_zero(const LRElement& a) {
  for (const auto& c : a.coords)
    if (!c.is_zero()) return false;
  return true;
}

std::string lr_to_string(const LRPresentation& pres, const LRElement& a) {
  std::string out;
  for (int i = 0; i < pres.rank; ++i) {
    const RingElement& c = a.coords[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (c.is_one()) {
      out += pres.basis_name(i);
    } else if (c.term_count() > 1) {
      out += "(" + c.to_string() + ")*" + pres.basis_name(i);
    } else {
      out += c.to_string() + "*" + pres.basis_name(i);
    }
  }
  return out.empty() ? "0" : out;
}

LRElement lr_bracket(const LRPresentation& pres, const LRElement& a, const LRElement& b) {
  LRElement out = lr_zero(pres);
  for (int i = 0; i < pres.rank; ++i) {
    const RingElement& ri = a.coords[i];
    if (ri.is_zero()) continue;
    for (int j = 0; j < pres.rank; ++j) {
      const RingElement& sj = b.coords[j];
      if (sj.is_zero()) continue;
      RingElement rs = ri * sj;
      for (int k = 0; k < pres.rank; ++k) out.coords[k] += rs * pres.bracket_sc[i][j][k];
      out.coords[j] += ri * derive(pres.anchor_img[i], sj);
      out.coords[i] -= sj * derive(pres.anchor_img[j], ri);
    }
  }
  return out;
}

Derivation lr_anchor(const LRPresentation& pres, const LRElement& a) {
  Derivation d = Derivation::zero(pres.ring);
  for (int i = 0; i < pres.rank; ++i)
    if (!a.coords[i].is_zero()) d = d + scale(a.coords[i], pres.anchor_img[i]);
  return d;
}

namespace {

// Ops adapter for jacobson_lambda over the base algebra
struct LRLieOps {
  const LRPresentation& pres;
  using Element = LRElement;
  Element zero() const { return lr_zero(pres); }
  Element add(const Element& a, const Element& b) const { return lr_add(a, b); }
  Element bracket(const Element& a, const Element& b) const { return lr_bracket(pres, a, b); }
  Element scale_residue(Residue c, const Element& a) const { return lr_scale_residue(c, a); }
  bool is_zero(const Element& a) const { return lr_is_zero(a); }
};

// (r x_i)^[p] by the scalar compatibility law
LRElement p_power_base(const LRPresentation& pres, const RingElement& r, int i) {
  LRElement out = lr_zero(pres);
  if (r.is_zero()) return out;
  RingElement rp = frobenius(r);
  for (int k = 0; k < pres.rank; ++k) out.coords[k] = rp * pres.pop_img[i][k];
  Derivation d = scale(r, pres.anchor_img[i]);
  RingElement tower = derive_iter(d, static_cast<int>(pres.ring.p) - 1, r);
  out.coords[i] += tower;
  return out;
}

}  // namespace

std::vector<LRElement> lambda_terms(const LRPresentation& pres, const LRElement& a,
                                    const LRElement& b) {
  return jacobson_lambda(LRLieOps{pres}, pres.ring.p, a, b);
}

LRElement lr_p_power_ordered(const LRPresentation& pres, const LRElement& a,
                             const std::vector<int>& order) {
  // collect the nonzero coordinates in the requested split order
  std::vector<int> live;
  for (int i : order)
    if (!a.coords[i].is_zero()) live.push_back(i);
  if (live.empty()) return lr_zero(pres);

  // a = u + v with u the first live coordinate; a^[p] = u^[p] + v^[p] + sum lambda_i(u, v)
  LRElement acc = p_power_base(pres, a.coords[live.back()], live.back());
  for (int idx = static_cast<int>(live.size()) - 2; idx >= 0; --idx) {
    int i = live[idx];
    LRElement u = lr_zero(pres);
    u.coords[i] = a.coords[i];
    LRElement tail = lr_zero(pres);
    for (int rest = idx + 1; rest < static_cast<int>(live.size()); ++rest)
      tail.coords[live[rest]] = a.coords[live[rest]];
    LRElement next = lr_add(p_power_base(pres, a.coords[i], i), acc);
    for (const LRElement& lam : lambda_terms(pres, u, tail)) next = lr_add(next, lam);
    acc = next;
  }
  return acc;
}

LRElement lr_p_power(const LRPresentation& pres, const LRElement& a) {
  std::vector<int> order(pres.rank);
  for (int i = 0; i < pres.rank; ++i) order[i] = i;
  return lr_p_power_ordered(pres, a, order);
}

LRElement random_lr_element(SplitMix64& rng, const LRPresentation& pres, int max_terms,
                            std::uint32_t max_exp) {
  LRElement out = lr_zero(pres);
  for (int i = 0; i < pres.rank; ++i)
    out.coords[i] = random_ring_element(rng, pres.ring, max_terms, max_exp);
  return out;
}

LRPresentation build_derivation_algebra(const RingSpec& ring) {
  LRPresentation pres = LRPresentation::empty(ring, ring.nvars);
  for (int i = 0; i < ring.nvars; ++i) {
    pres.anchor_img[i] = Derivation::partial(ring, i);
    Derivation dp = derivation_pth_power(pres.anchor_img[i]);
    // a derivation expands over the basis as d = sum_k d(t_k) d/dt_k
    for (int k = 0; k < ring.nvars; ++k) pres.pop_img[i][k] = dp.image(k);
  }
  pres.check_shape();
  return pres;
}

LRPresentation build_witt(std::uint32_t p) {
  return build_derivation_algebra(RingSpec(p, 1, true));
}

LRPresentation build_abelian(const RingSpec& ring, int rank) {
  LRPresentation pres = LRPresentation::empty(ring, rank);
  for (int i = 0; i < rank; ++i) pres.pop_img[i][i] = RingElement::constant(ring, 1);
  pres.check_shape();
  return pres;
}

}  // namespace rlr
