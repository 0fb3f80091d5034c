#include "rlr/lr_checks.hpp"

namespace rlr {

namespace {

LRElement jacobi_defect(const LRPresentation& pres, const LRElement& a, const LRElement& b,
                        const LRElement& c) {
  LRElement out = lr_bracket(pres, a, lr_bracket(pres, b, c));
  out = lr_add(out, lr_bracket(pres, b, lr_bracket(pres, c, a)));
  out = lr_add(out, lr_bracket(pres, c, lr_bracket(pres, a, b)));
  return out;
}

LRElement ad_iter(const LRPresentation& pres, const LRElement& a, int k, const LRElement& b) {
  LRElement out = b;
  for (int i = 0; i < k; ++i) out = lr_bracket(pres, a, out);
  return out;
}

}  // namespace

Report verify_axioms(const LRPresentation& pres, int trials, std::uint64_t seed) {
  pres.check_shape();
  const std::uint32_t p = pres.ring.p;
  Report rep;
  rep.suite = "verify";
  rep.subject = pres.describe();
  rep.seed = seed;

  {
    CheckResult& c = rep.add_check("jacobi");
    SplitMix64 rng = seeded_for(seed, "jacobi");
    // the stored constants first: all basis triples
    for (int i = 0; i < pres.rank && c.passed; ++i)
      for (int j = 0; j < pres.rank && c.passed; ++j)
        for (int k = 0; k < pres.rank && c.passed; ++k) {
          ++c.trials;
          LRElement d = jacobi_defect(pres, lr_basis(pres, i), lr_basis(pres, j),
                                      lr_basis(pres, k));
          if (!lr_is_zero(d))
            c.fail({{"a", pres.basis_name(i)},
                    {"b", pres.basis_name(j)},
                    {"c", pres.basis_name(k)},
                    {"defect", lr_to_string(pres, d)}});
        }
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LRElement a = random_lr_element(rng, pres);
      LRElement b = random_lr_element(rng, pres);
      LRElement cc = random_lr_element(rng, pres);
      LRElement d = jacobi_defect(pres, a, b, cc);
      if (!lr_is_zero(d))
        c.fail({{"a", lr_to_string(pres, a)},
                {"b", lr_to_string(pres, b)},
                {"c", lr_to_string(pres, cc)},
                {"defect", lr_to_string(pres, d)}});
    }
  }

  {
    CheckResult& c = rep.add_check("anchor-lie-map");
    SplitMix64 rng = seeded_for(seed, "anchor-lie-map");
    auto check_pair = [&](const LRElement& a, const LRElement& b, const std::string& sa,
                          const std::string& sb) {
      ++c.trials;
      Derivation lhs = lr_anchor(pres, lr_bracket(pres, a, b));
      Derivation rhs = derivation_bracket(lr_anchor(pres, a), lr_anchor(pres, b));
      if (!(lhs == rhs))
        c.fail({{"a", sa}, {"b", sb}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
    };
    for (int i = 0; i < pres.rank && c.passed; ++i)
      for (int j = 0; j < pres.rank && c.passed; ++j)
        check_pair(lr_basis(pres, i), lr_basis(pres, j), pres.basis_name(i), pres.basis_name(j));
    for (int t = 0; t < trials && c.passed; ++t) {
      LRElement a = random_lr_element(rng, pres);
      LRElement b = random_lr_element(rng, pres);
      check_pair(a, b, lr_to_string(pres, a), lr_to_string(pres, b));
    }
  }

  {
    CheckResult& c = rep.add_check("anchor-leibniz");
    SplitMix64 rng = seeded_for(seed, "anchor-leibniz");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LRElement a = random_lr_element(rng, pres);
      LRElement b = random_lr_element(rng, pres);
      RingElement r = random_ring_element(rng, pres.ring);
      LRElement lhs = lr_bracket(pres, a, lr_scale(r, b));
      LRElement rhs = lr_add(lr_scale(r, lr_bracket(pres, a, b)),
                             lr_scale(derive(lr_anchor(pres, a), r), b));
      if (!lr_eq(lhs, rhs))
        c.fail({{"a", lr_to_string(pres, a)},
                {"b", lr_to_string(pres, b)},
                {"r", r.to_string()},
                {"lhs", lr_to_string(pres, lhs)},
                {"rhs", lr_to_string(pres, rhs)}});
    }
  }

  {
    CheckResult& c = rep.add_check("ad-p-power");
    SplitMix64 rng = seeded_for(seed, "ad-p-power");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LRElement a = random_lr_element(rng, pres);
      LRElement b = random_lr_element(rng, pres);
      LRElement lhs = lr_bracket(pres, lr_p_power(pres, a), b);
      LRElement rhs = ad_iter(pres, a, static_cast<int>(p), b);
      if (!lr_eq(lhs, rhs))
        c.fail({{"a", lr_to_string(pres, a)},
                {"b", lr_to_string(pres, b)},
                {"lhs", lr_to_string(pres, lhs)},
                {"rhs", lr_to_string(pres, rhs)}});
    }
  }

  {
    CheckResult& c = rep.add_check("p-additivity");
    SplitMix64 rng = seeded_for(seed, "p-additivity");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LRElement a = random_lr_element(rng, pres);
      LRElement b = random_lr_element(rng, pres);
      LRElement lhs = lr_p_power(pres, lr_add(a, b));
      LRElement rhs = lr_add(lr_p_power(pres, a), lr_p_power(pres, b));
      for (const LRElement& lam : lambda_terms(pres, a, b)) rhs = lr_add(rhs, lam);
      if (!lr_eq(lhs, rhs))
        c.fail({{"a", lr_to_string(pres, a)},
                {"b", lr_to_string(pres, b)},
                {"lhs", lr_to_string(pres, lhs)},
                {"rhs", lr_to_string(pres, rhs)}});
    }
  }

  {
    CheckResult& c = rep.add_check("hochschild-scalar");
    SplitMix64 rng = seeded_for(seed, "hochschild-scalar");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      RingElement r = random_ring_element(rng, pres.ring);
      // alternate between bare basis elements and general elements
      LRElement a = (t % 2 == 0 && pres.rank > 0)
                        ? lr_basis(pres, static_cast<int>(rng.below(pres.rank)))
                        : random_lr_element(rng, pres);
      LRElement lhs = lr_p_power(pres, lr_scale(r, a));
      Derivation d = lr_anchor(pres, lr_scale(r, a));
      RingElement tower = derive_iter(d, static_cast<int>(p) - 1, r);
      LRElement rhs = lr_add(lr_scale(frobenius(r), lr_p_power(pres, a)), lr_scale(tower, a));
      if (!lr_eq(lhs, rhs))
        c.fail({{"r", r.to_string()},
                {"a", lr_to_string(pres, a)},
                {"lhs", lr_to_string(pres, lhs)},
                {"rhs", lr_to_string(pres, rhs)}});
    }
  }

  {
    CheckResult& c = rep.add_check("anchor-p-power");
    SplitMix64 rng = seeded_for(seed, "anchor-p-power");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LRElement a = random_lr_element(rng, pres);
      Derivation lhs = lr_anchor(pres, lr_p_power(pres, a));
      Derivation rhs = derivation_pth_power(lr_anchor(pres, a));
      if (!(lhs == rhs))
        c.fail({{"a", lr_to_string(pres, a)},
                {"lhs", lhs.to_string()},
                {"rhs", rhs.to_string()}});
    }
  }

  return rep;
}

}  // namespace rlr
