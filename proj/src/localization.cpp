#include "rlr/localization.hpp"

#include <stdexcept>

#include "rlr/jacobson.hpp"
#include "rlr/lr_checks.hpp"

namespace rlr {

MultSet::MultSet(const RingSpec& ring, std::vector<RingElement> generators)
    : ring_(ring), generators_(std::move(generators)) {
  if (ring_.truncated)
    throw std::invalid_argument("localization needs a non-truncated (domain) ring");
  for (const RingElement& g : generators_) {
    if (!(g.spec() == ring_)) throw std::invalid_argument("mixed-ring operands");
    if (g.is_zero()) throw std::invalid_argument("zero multiplicative-set generator");
  }
}

RingElement MultSet::product(const std::vector<std::uint32_t>& exps) const {
  RingElement out = one();
  for (std::size_t i = 0; i < exps.size() && i < generators_.size(); ++i)
    out = out * pow(generators_[i], exps[i]);
  return out;
}

RingElement MultSet::random_member(SplitMix64& rng, std::uint32_t max_exp) const {
  std::vector<std::uint32_t> exps(generators_.size());
  for (auto& e : exps) e = static_cast<std::uint32_t>(rng.below(max_exp + 1));
  return product(exps);
}

LocElement loc_of(const LRPresentation& pres, const LRElement& x) {
  return LocElement{RingElement::constant(pres.ring, 1), x};
}

LocElement loc_make(RingElement den, LRElement num) {
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return LocElement{std::move(den), std::move(num)};
}

LocElement loc_zero(const LRPresentation& pres) { return loc_of(pres, lr_zero(pres)); }

bool loc_equal(const LocElement& a, const LocElement& b) {
  return lr_eq(lr_scale(b.den, a.num), lr_scale(a.den, b.num));
}

bool loc_equal_with_witness(const LocElement& a, const LocElement& b, const RingElement& u) {
  if (u.is_zero()) throw std::invalid_argument("witness must be nonzero");
  return lr_eq(lr_scale(u * b.den, a.num), lr_scale(u * a.den, b.num));
}

LocElement loc_add(const LocElement& a, const LocElement& b) {
  return LocElement{a.den * b.den, lr_add(lr_scale(b.den, a.num), lr_scale(a.den, b.num))};
}

LocElement loc_sub(const LocElement& a, const LocElement& b) {
  return LocElement{a.den * b.den, lr_sub(lr_scale(b.den, a.num), lr_scale(a.den, b.num))};
}

LocElement loc_neg(const LocElement& a) { return LocElement{a.den, lr_neg(a.num)}; }

LocElement loc_scale_fraction(const Fraction& f, const LocElement& a) {
  return loc_make(f.den() * a.den, lr_scale(f.num(), a.num));
}

LocElement loc_scale_residue(Residue c, const LocElement& a) {
  return LocElement{a.den, lr_scale_residue(c, a.num)};
}

bool loc_is_zero(const LocElement& a) { return lr_is_zero(a.num); }

std::string loc_to_string(const LRPresentation& pres, const LocElement& a) {
  std::string n = lr_to_string(pres, a.num);
  if (a.den.is_one()) return n;
  std::string num_str = n.find(" + ") != std::string::npos ? "(" + n + ")" : n;
  std::string d = a.den.to_string();
  std::string den_str = a.den.term_count() > 1 ? "(" + d + ")" : d;
  return num_str + " / " + den_str;
}

Fraction loc_anchor(const LRPresentation& pres, const LocElement& a, const Fraction& r) {
  // s^{-1}t^{-1} x(r) - s^{-1}t^{-2} x(t) r  with x(.) the anchor of the numerator
  Derivation d = lr_anchor(pres, a.num);
  const RingElement& s = a.den;
  const RingElement& t = r.den();
  RingElement numerator = derive(d, r.num()) * t - derive(d, t) * r.num();
  return Fraction(numerator, s * t * t);
}

LocElement loc_bracket(const LRPresentation& pres, const LocElement& a, const LocElement& b) {
  const RingElement& s = a.den;
  const RingElement& t = b.den;
  // common denominator s^2 t^2:
  //   st [x,y] - s x(t) y + t y(s) x
  LRElement num = lr_scale(s * t, lr_bracket(pres, a.num, b.num));
  num = lr_sub(num, lr_scale(s * derive(lr_anchor(pres, a.num), t), b.num));
  num = lr_add(num, lr_scale(t * derive(lr_anchor(pres, b.num), s), a.num));
  return LocElement{s * s * t * t, std::move(num)};
}

LocElement loc_p_power(const LRPresentation& pres, const LocElement& a) {
  const std::uint32_t p = pres.ring.p;
  const RingElement& s = a.den;
  RingElement tower = derive_iter(lr_anchor(pres, a.num), static_cast<int>(p) - 1, s);
  LRElement num = lr_sub(lr_scale(s, lr_p_power(pres, a.num)), lr_scale(tower, a.num));
  return LocElement{pow(s, p + 1), std::move(num)};
}

LocElement random_loc_element(SplitMix64& rng, const LRPresentation& pres, const MultSet& S) {
  LRElement num = random_lr_element(rng, pres);
  return LocElement{S.random_member(rng), std::move(num)};
}

FracEnvelope localize_envelope(const LRPresentation& pres, EnvMode mode) {
  if (pres.ring.truncated)
    throw std::invalid_argument("localization needs a non-truncated (domain) ring");
  return make_fraction_envelope(pres, mode);
}

FracEnvelope::Element embed_loc(const FracEnvelope& env, const LocElement& a) {
  std::vector<Fraction> coords;
  coords.reserve(a.num.coords.size());
  for (const RingElement& c : a.num.coords) coords.push_back(Fraction(c, a.den));
  return env.embed(coords);
}

namespace {

FracEnvelope::Element inject(const PolyEnvelope::Element& a) {
  FracEnvelope::Element out;
  for (const auto& [m, c] : a) out.emplace(m, Fraction::of(c));
  return out;
}

// iterated loc_anchor: eps(a)^k applied to a fraction
Fraction loc_anchor_iter(const LRPresentation& pres, const LocElement& a, int k,
                         const Fraction& r) {
  Fraction out = r;
  for (int i = 0; i < k; ++i) out = loc_anchor(pres, a, out);
  return out;
}

LocElement loc_ad_iter(const LRPresentation& pres, const LocElement& a, int k,
                       const LocElement& b) {
  LocElement out = b;
  for (int i = 0; i < k; ++i) out = loc_bracket(pres, a, out);
  return out;
}

Fraction random_fraction(SplitMix64& rng, const LRPresentation& pres, const MultSet& S) {
  return Fraction(random_ring_element(rng, pres.ring), S.random_member(rng));
}

}  // namespace

Report verify_loc_well_defined(const LRPresentation& pres, const MultSet& S, int trials,
                               std::uint64_t seed) {
  const std::uint32_t p = pres.ring.p;
  Report rep;
  rep.suite = "verify-loc-well-defined";
  rep.subject = pres.describe();
  rep.seed = seed;

  {
    // hypotheses of the well-definedness derivation: the source algebra is
    // genuinely restricted (its p-data is consistent with ad and the anchor)
    CheckResult& c = rep.add_check("wd-source-restricted");
    SplitMix64 rng = seeded_for(seed, "wd-source-restricted");
    int sub = std::max(5, trials / 5);
    for (int t = 0; t < sub && c.passed; ++t) {
      ++c.trials;
      LRElement a = random_lr_element(rng, pres);
      LRElement b = random_lr_element(rng, pres);
      LRElement ad = b;
      for (std::uint32_t k = 0; k < p; ++k) ad = lr_bracket(pres, a, ad);
      bool ok = lr_eq(lr_bracket(pres, lr_p_power(pres, a), b), ad);
      ok = ok && lr_anchor(pres, lr_p_power(pres, a)) ==
                     derivation_pth_power(lr_anchor(pres, a));
      LRElement sum = lr_add(lr_p_power(pres, a), lr_p_power(pres, b));
      for (const LRElement& lam : lambda_terms(pres, a, b)) sum = lr_add(sum, lam);
      ok = ok && lr_eq(lr_p_power(pres, lr_add(a, b)), sum);
      if (!ok)
        c.fail({{"a", lr_to_string(pres, a)}, {"b", lr_to_string(pres, b)}});
    }
  }

  {
    // (s^{-1}x)^p = s^{-p-1}(s x^p - x^{p-1}(s) x), computed in the
    // fraction-coefficient full envelope
    CheckResult& c = rep.add_check("wd-envelope-power");
    SplitMix64 rng = seeded_for(seed, "wd-envelope-power");
    FracEnvelope env = localize_envelope(pres, EnvMode::full);
    PolyEnvelope base = make_envelope(pres, EnvMode::full);
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LocElement a = random_loc_element(rng, pres, S);
      FracEnvelope::Element lhs = env.power(embed_loc(env, a), p);
      // x^p over R, then injected into the fraction envelope
      PolyEnvelope::Element xp = base.power(base.embed(a.num.coords), p);
      RingElement tower = derive_iter(lr_anchor(pres, a.num), static_cast<int>(p) - 1, a.den);
      Fraction sinv = Fraction(RingElement::constant(pres.ring, 1), pow(a.den, p + 1));
      FracEnvelope::Element rhs =
          env.scale(sinv, env.sub(env.scale(Fraction::of(a.den), inject(xp)),
                                  env.scale(Fraction::of(tower),
                                            inject(base.embed(a.num.coords)))));
      if (!env.equal(lhs, rhs))
        c.fail({{"a", loc_to_string(pres, a)},
                {"lhs", env.to_string(lhs)},
                {"rhs", env.to_string(rhs)}});
    }
  }

  // constructive equivalent pairs: a core (s0, x0) rescaled two ways
  auto make_pair = [&](SplitMix64& rng, LocElement& A, LocElement& B) {
    LRElement x0 = random_lr_element(rng, pres);
    RingElement s0 = S.random_member(rng);
    RingElement w1 = S.random_member(rng);
    RingElement w2 = S.random_member(rng);
    A = LocElement{w1 * s0, lr_scale(w1, x0)};
    B = LocElement{w2 * s0, lr_scale(w2, x0)};
  };

  {
    // cross-multiplied envelope powers of equivalent representatives agree
    // in U(R,L): v t^{p+1} (s x^p - x^{p-1}(s) x) = v s^{p+1} (t y^p - y^{p-1}(t) y)
    CheckResult& c = rep.add_check("wd-envelope-cross");
    SplitMix64 rng = seeded_for(seed, "wd-envelope-cross");
    PolyEnvelope env = make_envelope(pres, EnvMode::full);
    // v other^{p+1} (s x^p - x^{p-1}(s) x) for one representative s^{-1}x
    auto side = [&](const RingElement& v, const LocElement& e, const RingElement& other) {
      RingElement tower = derive_iter(lr_anchor(pres, e.num), static_cast<int>(p) - 1, e.den);
      PolyEnvelope::Element power = env.power(env.embed(e.num.coords), p);
      PolyEnvelope::Element inner = env.sub(env.scale(e.den, power),
                                            env.scale(tower, env.embed(e.num.coords)));
      return env.scale(v * pow(other, p + 1), inner);
    };
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LocElement A = loc_zero(pres), B = loc_zero(pres);
      make_pair(rng, A, B);
      RingElement v = S.random_member(rng);
      PolyEnvelope::Element lhs = side(v, A, B.den);
      PolyEnvelope::Element rhs = side(v, B, A.den);
      if (!env.equal(lhs, rhs))
        c.fail({{"a", loc_to_string(pres, A)},
                {"b", loc_to_string(pres, B)},
                {"lhs", env.to_string(lhs)},
                {"rhs", env.to_string(rhs)}});
    }
  }

  {
    // the derived cross identity in L:
    //   v t s (utx)^{p-1}(ut) x + v u^p t^{p+1} x^{p-1}(s) x
    // = v t s (usy)^{p-1}(us) y + v u^p s^{p+1} y^{p-1}(t) y
    CheckResult& c = rep.add_check("wd-tower-cross");
    SplitMix64 rng = seeded_for(seed, "wd-tower-cross");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LocElement A = loc_zero(pres), B = loc_zero(pres);
      make_pair(rng, A, B);
      RingElement u = S.random_member(rng);
      RingElement v = S.random_member(rng);
      RingElement ts = A.den * B.den;
      // for the representative s^{-1}x with the other denominator t:
      //   v t s (utx)^{p-1}(ut) x + v u^p t^{p+1} x^{p-1}(s) x
      auto side = [&](const LocElement& e, const RingElement& other) {
        RingElement uo = u * other;
        RingElement tow1 =
            derive_iter(lr_anchor(pres, lr_scale(uo, e.num)), static_cast<int>(p) - 1, uo);
        RingElement tow2 = derive_iter(lr_anchor(pres, e.num), static_cast<int>(p) - 1, e.den);
        LRElement out = lr_scale(v * ts * tow1, e.num);
        return lr_add(out, lr_scale(v * frobenius(u) * pow(other, p + 1) * tow2, e.num));
      };
      LRElement lhs = side(A, B.den);
      LRElement rhs = side(B, A.den);
      if (!lr_eq(lhs, rhs))
        c.fail({{"a", loc_to_string(pres, A)},
                {"b", loc_to_string(pres, B)},
                {"u", u.to_string()},
                {"v", v.to_string()},
                {"lhs", lr_to_string(pres, lhs)},
                {"rhs", lr_to_string(pres, rhs)}});
    }
  }

  {
    CheckResult& c = rep.add_check("wd-p-power-agrees");
    SplitMix64 rng = seeded_for(seed, "wd-p-power-agrees");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LocElement A = loc_zero(pres), B = loc_zero(pres);
      if (t == 0) {
        // the trivial pair
        A = random_loc_element(rng, pres, S);
        B = A;
      } else {
        make_pair(rng, A, B);
      }
      LocElement pa = loc_p_power(pres, A);
      LocElement pb = loc_p_power(pres, B);
      RingElement u = S.random_member(rng);
      bool ok = loc_equal(pa, pb) && loc_equal_with_witness(pa, pb, u);
      if (!ok)
        c.fail({{"a", loc_to_string(pres, A)},
                {"b", loc_to_string(pres, B)},
                {"a^[p]", loc_to_string(pres, pa)},
                {"b^[p]", loc_to_string(pres, pb)}});
    }
  }

  return rep;
}

Report verify_loc_axioms(const LRPresentation& pres, const MultSet& S, int trials,
                         std::uint64_t seed) {
  const std::uint32_t p = pres.ring.p;
  Report rep;
  rep.suite = "verify-loc";
  rep.subject = pres.describe();
  rep.seed = seed;

  {
    CheckResult& c = rep.add_check("loc-jacobi");
    SplitMix64 rng = seeded_for(seed, "loc-jacobi");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LocElement a = random_loc_element(rng, pres, S);
      LocElement b = random_loc_element(rng, pres, S);
      LocElement cc = random_loc_element(rng, pres, S);
      LocElement d = loc_bracket(pres, a, loc_bracket(pres, b, cc));
      d = loc_add(d, loc_bracket(pres, b, loc_bracket(pres, cc, a)));
      d = loc_add(d, loc_bracket(pres, cc, loc_bracket(pres, a, b)));
      if (!loc_is_zero(d))
        c.fail({{"a", loc_to_string(pres, a)},
                {"b", loc_to_string(pres, b)},
                {"c", loc_to_string(pres, cc)},
                {"defect", loc_to_string(pres, d)}});
    }
  }

  {
    CheckResult& c = rep.add_check("loc-anchor-lie-map");
    SplitMix64 rng = seeded_for(seed, "loc-anchor-lie-map");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LocElement a = random_loc_element(rng, pres, S);
      LocElement b = random_loc_element(rng, pres, S);
      Fraction f = random_fraction(rng, pres, S);
      Fraction lhs = loc_anchor(pres, loc_bracket(pres, a, b), f);
      Fraction rhs = loc_anchor(pres, a, loc_anchor(pres, b, f)) -
                     loc_anchor(pres, b, loc_anchor(pres, a, f));
      if (!(lhs == rhs))
        c.fail({{"a", loc_to_string(pres, a)},
                {"b", loc_to_string(pres, b)},
                {"f", f.to_string()},
                {"lhs", lhs.to_string()},
                {"rhs", rhs.to_string()}});
    }
  }

  {
    CheckResult& c = rep.add_check("loc-anchor-leibniz");
    SplitMix64 rng = seeded_for(seed, "loc-anchor-leibniz");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LocElement a = random_loc_element(rng, pres, S);
      LocElement b = random_loc_element(rng, pres, S);
      Fraction f = random_fraction(rng, pres, S);
      LocElement lhs = loc_bracket(pres, a, loc_scale_fraction(f, b));
      LocElement rhs = loc_add(loc_scale_fraction(f, loc_bracket(pres, a, b)),
                               loc_scale_fraction(loc_anchor(pres, a, f), b));
      if (!loc_equal(lhs, rhs))
        c.fail({{"a", loc_to_string(pres, a)},
                {"b", loc_to_string(pres, b)},
                {"f", f.to_string()},
                {"lhs", loc_to_string(pres, lhs)},
                {"rhs", loc_to_string(pres, rhs)}});
    }
  }

  {
    // [a^[p], b] = ad(a)^p(b) over the localized operations
    CheckResult& c = rep.add_check("loc-ad-p-power");
    SplitMix64 rng = seeded_for(seed, "loc-ad-p-power");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LocElement a = random_loc_element(rng, pres, S);
      LocElement b = random_loc_element(rng, pres, S);
      LocElement lhs = loc_bracket(pres, loc_p_power(pres, a), b);
      LocElement rhs = loc_ad_iter(pres, a, static_cast<int>(p), b);
      if (!loc_equal(lhs, rhs))
        c.fail({{"a", loc_to_string(pres, a)},
                {"b", loc_to_string(pres, b)},
                {"lhs", loc_to_string(pres, lhs)},
                {"rhs", loc_to_string(pres, rhs)}});
    }
  }

  {
    // common-denominator reduction: a = s^{-1}x, b = s^{-1}y
    CheckResult& c = rep.add_check("loc-p-additivity");
    SplitMix64 rng = seeded_for(seed, "loc-p-additivity");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      RingElement s = S.random_member(rng);
      LocElement a = LocElement{s, random_lr_element(rng, pres)};
      LocElement b = LocElement{s, random_lr_element(rng, pres)};
      LocElement lhs = loc_p_power(pres, loc_add(a, b));
      LocElement rhs = loc_add(loc_p_power(pres, a), loc_p_power(pres, b));
      for (const LocElement& lam : jacobson_lambda(LocLieOps{pres}, p, a, b))
        rhs = loc_add(rhs, lam);
      if (!loc_equal(lhs, rhs))
        c.fail({{"a", loc_to_string(pres, a)},
                {"b", loc_to_string(pres, b)},
                {"lhs", loc_to_string(pres, lhs)},
                {"rhs", loc_to_string(pres, rhs)}});
    }
  }

  {
    // (f a)^[p] = f^p a^[p] + (eps(f a))^{p-1}(f) a with f in R_S
    CheckResult& c = rep.add_check("loc-hochschild-scalar");
    SplitMix64 rng = seeded_for(seed, "loc-hochschild-scalar");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LocElement a = random_loc_element(rng, pres, S);
      Fraction f = random_fraction(rng, pres, S);
      LocElement fa = loc_scale_fraction(f, a);
      LocElement lhs = loc_p_power(pres, fa);
      Fraction tower = loc_anchor_iter(pres, fa, static_cast<int>(p) - 1, f);
      LocElement rhs = loc_add(loc_scale_fraction(pow(f, p), loc_p_power(pres, a)),
                               loc_scale_fraction(tower, a));
      if (!loc_equal(lhs, rhs))
        c.fail({{"a", loc_to_string(pres, a)},
                {"f", f.to_string()},
                {"lhs", loc_to_string(pres, lhs)},
                {"rhs", loc_to_string(pres, rhs)}});
    }
  }

  {
    CheckResult& c = rep.add_check("loc-anchor-p-power");
    SplitMix64 rng = seeded_for(seed, "loc-anchor-p-power");
    for (int t = 0; t < trials && c.passed; ++t) {
      ++c.trials;
      LocElement a = random_loc_element(rng, pres, S);
      Fraction f = (t % 2 == 0 && pres.ring.nvars > 0)
                       ? Fraction::of(RingElement::variable(
                             pres.ring, static_cast<int>(rng.below(pres.ring.nvars))))
                       : random_fraction(rng, pres, S);
      Fraction lhs = loc_anchor(pres, loc_p_power(pres, a), f);
      Fraction rhs = loc_anchor_iter(pres, a, static_cast<int>(p), f);
      if (!(lhs == rhs))
        c.fail({{"a", loc_to_string(pres, a)},
                {"f", f.to_string()},
                {"lhs", lhs.to_string()},
                {"rhs", rhs.to_string()}});
    }
  }

  return rep;
}

}  // namespace rlr
