#pragma once

#include <cstdint>
#include <vector>

#include "rlr/modular.hpp"

namespace rlr {

// The terms lambda_i(a, b) completing the p-th power additivity law
//   (a+b)^[p] = a^[p] + b^[p] + sum_{i=1}^{p-1} lambda_i(a, b):
// i*lambda_i(a, b) is the coefficient of T^{i-1} in ad(Ta+b)^{p-1}(a),
// computed in L tensor K[T] with the bracket extended T-linearly.  The
// division by i is exact since 1 <= i <= p-1 is invertible mod p.
//
// Ops must provide: Element zero() const, add(a,b), bracket(a,b),
// scale_residue(c, a), and is_zero(a).  Instantiated for the base algebra
// and again for its localizations.
template <class Ops>
std::vector<typename Ops::Element> jacobson_lambda(const Ops& ops, std::uint32_t p,
                                                   const typename Ops::Element& a,
                                                   const typename Ops::Element& b) {
  using Element = typename Ops::Element;
  std::vector<Element> cur;  // coefficients by T-degree
  cur.push_back(a);
  for (std::uint32_t step = 1; step + 1 <= p; ++step) {
    std::vector<Element> next(cur.size() + 1, ops.zero());
    for (std::size_t d = 0; d < cur.size(); ++d) {
      if (ops.is_zero(cur[d])) continue;
      next[d + 1] = ops.add(next[d + 1], ops.bracket(a, cur[d]));
      next[d] = ops.add(next[d], ops.bracket(b, cur[d]));
    }
    cur = std::move(next);
  }
  std::vector<Element> lambdas;
  lambdas.reserve(p - 1);
  for (std::uint32_t i = 1; i <= p - 1; ++i)
    lambdas.push_back(ops.scale_residue(inv_mod(i % p, p), cur[i - 1]));
  return lambdas;
}

}  // namespace rlr
