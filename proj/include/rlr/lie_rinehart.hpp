#pragma once

#include <string>
#include <vector>

#include "rlr/derivation.hpp"
#include "rlr/random_gen.hpp"
#include "rlr/ring.hpp"

namespace rlr {

// A restricted Lie-Rinehart algebra presented on a free R-module basis
// x_1..x_m: bracket structure constants [x_i,x_j] = sum_k c_ij^k x_k,
// anchor images eps(x_i) as derivations of R, and p-operation images
// x_i^[p] = sum_k a_i^k x_k.
//
// Construction only enforces shape and antisymmetry of the stored
// constants; whether the data satisfies the restricted Lie-Rinehart axioms
// is established by verify_axioms, which callers run before admitting a
// presentation (or skip deliberately, e.g. for fault-injection tests).
struct LRPresentation {
  RingSpec ring;
  int rank = 0;
  std::vector<std::vector<std::vector<RingElement>>> bracket_sc;  // [i][j][k]
  std::vector<Derivation> anchor_img;
  std::vector<std::vector<RingElement>> pop_img;  // [i][k]

  static LRPresentation empty(const RingSpec& ring, int rank);

  // writes c into [x_i, x_j] (component k) and -c into the mirror entry
  void set_bracket(int i, int j, int k, const RingElement& c);

  // throws on malformed sizes, c_ii != 0, or broken antisymmetry
  void check_shape() const;

  bool operator==(const LRPresentation&) const;

  std::string basis_name(int i) const;  // "D" when rank 1, else "x1".."xm"
  std::string describe() const;
};

// Element of L as a left R-module coordinate vector over the basis.
struct LRElement {
  std::vector<RingElement> coords;
};

LRElement lr_zero(const LRPresentation& pres);
LRElement lr_basis(const LRPresentation& pres, int i);
LRElement lr_add(const LRElement& a, const LRElement& b);
LRElement lr_sub(const LRElement& a, const LRElement& b);
LRElement lr_neg(const LRElement& a);
LRElement lr_scale(const RingElement& r, const LRElement& a);
LRElement lr_scale_residue(Residue c, const LRElement& a);
bool lr_eq(const LRElement& a, const LRElement& b);
bool lr_is_zero(const LRElement& a);
std::string lr_to_string(const LRPresentation& pres, const LRElement& a);

// [sum r_i x_i, sum s_j x_j] expanded by the anchor-Leibniz law
// [x, ry] = r[x,y] + eps(x)(r) y together with antisymmetry.
LRElement lr_bracket(const LRPresentation& pres, const LRElement& a, const LRElement& b);

// eps(sum r_i x_i) = sum r_i eps(x_i)
Derivation lr_anchor(const LRPresentation& pres, const LRElement& a);

// the p-1 terms lambda_i(a, b); see jacobson.hpp for the normalization
std::vector<LRElement> lambda_terms(const LRPresentation& pres, const LRElement& a,
                                    const LRElement& b);

// a^[p], extended from the stored basis images by
//   (r x_i)^[p] = r^p x_i^[p] + (eps(r x_i))^{p-1}(r) x_i
// and the additivity law, splitting off one basis coordinate at a time.
LRElement lr_p_power(const LRPresentation& pres, const LRElement& a);

// same, but splits coordinates in the given order; the result must not
// depend on it (regression property)
LRElement lr_p_power_ordered(const LRPresentation& pres, const LRElement& a,
                             const std::vector<int>& order);

LRElement random_lr_element(SplitMix64& rng, const LRPresentation& pres, int max_terms = 2,
                            std::uint32_t max_exp = 2);

// ---- builders ----

// L = Der_K(R), free with basis the partials d/dt_1..d/dt_n; commuting
// brackets, identity anchor, p-operation computed from the p-fold partials
// (zero over polynomial and truncated polynomial rings).
LRPresentation build_derivation_algebra(const RingSpec& ring);

// Der of F_p[t]/(t^p): the rank-one presentation of W(1;1)
LRPresentation build_witt(std::uint32_t p);

// zero bracket, zero anchor, x_i^[p] = x_i
LRPresentation build_abelian(const RingSpec& ring, int rank);

}  // namespace rlr
