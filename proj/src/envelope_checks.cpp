#include "rlr/envelope_checks.hpp"

namespace rlr {

Report verify_centrality(const LRPresentation& pres) {
  PolyEnvelope env = make_envelope(pres, EnvMode::full);
  Report rep;
  rep.suite = "verify-centrality";
  rep.subject = pres.describe();
  CheckResult& c = rep.add_check("centrality");
  for (int i = 0; i < pres.rank && c.passed; ++i) {
    PolyEnvelope::Element z = central_z(env, i);
    for (int j = 0; j < pres.rank && c.passed; ++j) {
      ++c.trials;
      PolyEnvelope::Element comm = env.commutator(z, env.letter(j));
      if (!env.is_zero(comm))
        c.fail({{"z-index", std::to_string(i + 1)},
                {"against", pres.basis_name(j)},
                {"commutator", env.to_string(comm)}});
    }
    for (int j = 0; j < pres.ring.nvars && c.passed; ++j) {
      ++c.trials;
      PolyEnvelope::Element comm =
          env.commutator(z, env.scalar(RingElement::variable(pres.ring, j)));
      if (!env.is_zero(comm))
        c.fail({{"z-index", std::to_string(i + 1)},
                {"against", pres.ring.var_name(j)},
                {"commutator", env.to_string(comm)}});
    }
  }
  return rep;
}

Report verify_hochschild_in_envelope(const LRPresentation& pres, int trials,
                                     std::uint64_t seed) {
  PolyEnvelope env = make_envelope(pres, EnvMode::full);
  const std::uint32_t p = pres.ring.p;
  Report rep;
  rep.suite = "verify-envelope";
  rep.subject = pres.describe();
  rep.seed = seed;
  CheckResult& c = rep.add_check("hochschild-envelope");
  SplitMix64 rng = seeded_for(seed, "hochschild-envelope");
  for (int t = 0; t < trials && c.passed; ++t) {
    ++c.trials;
    RingElement r = (t == 0)   ? RingElement::zero(pres.ring)
                    : (t == 1) ? RingElement::constant(pres.ring, 1)
                               : random_ring_element(rng, pres.ring);
    int i = static_cast<int>(rng.below(pres.rank));
    PolyEnvelope::Element rx = env.scale(r, env.letter(i));
    PolyEnvelope::Element lhs = env.power(rx, p);
    PBWMonomial xp;
    xp.factors.emplace_back(i, p);
    RingElement tower =
        derive_iter(scale(r, pres.anchor_img[i]), static_cast<int>(p) - 1, r);
    PolyEnvelope::Element rhs = env.add(env.scale(frobenius(r), env.monomial(xp)),
                                        env.scale(tower, env.letter(i)));
    if (!env.equal(lhs, rhs))
      c.fail({{"r", r.to_string()},
              {"x", pres.basis_name(i)},
              {"lhs", env.to_string(lhs)},
              {"rhs", env.to_string(rhs)}});
  }
  return rep;
}

ClosureCertificate closure_certificate(const LRPresentation& pres) {
  if (!pres.ring.truncated)
    throw std::invalid_argument("dimension counting needs a truncated coefficient ring");
  PolyEnvelope env = make_envelope(pres, EnvMode::restricted);
  const std::uint32_t p = pres.ring.p;

  ClosureCertificate cert;
  cert.basis_rank = 1;
  for (int i = 0; i < pres.rank; ++i) cert.basis_rank *= p;
  cert.fp_dimension = cert.basis_rank;
  for (int j = 0; j < pres.ring.nvars; ++j) cert.fp_dimension *= p;

  // every F_p-basis vector of u(R,L): ring monomial times PBW monomial
  std::vector<PBWMonomial> monos = restricted_basis(pres.rank, p);
  std::vector<RingElement> ring_basis;
  {
    Exponents e(pres.ring.nvars, 0);
    for (;;) {
      ring_basis.push_back(RingElement::monomial(pres.ring, e, 1));
      int j = pres.ring.nvars - 1;
      while (j >= 0 && e[j] == p - 1) e[j--] = 0;
      if (j < 0) break;
      ++e[j];
    }
  }

  auto inside = [&](const PBWMonomial& m) {
    for (const auto& [i, exp] : m.factors)
      if (exp >= p) return false;
    return true;
  };

  for (const RingElement& r1 : ring_basis)
    for (const PBWMonomial& m1 : monos)
      for (const RingElement& r2 : ring_basis)
        for (const PBWMonomial& m2 : monos) {
          PolyEnvelope::Element prod =
              env.multiply(env.scale(r1, env.monomial(m1)), env.scale(r2, env.monomial(m2)));
          for (const auto& [m, c] : prod)
            if (!inside(m)) {
              cert.closed = false;
              cert.violation = env.to_string(prod);
              return cert;
            }
        }
  return cert;
}

Report verify_envelope_embedding(const LRPresentation& pres, int trials, std::uint64_t seed) {
  PolyEnvelope env = make_envelope(pres, EnvMode::restricted);
  std::vector<PolyEnvelope::Element> images;
  images.reserve(pres.rank);
  for (int i = 0; i < pres.rank; ++i) images.push_back(env.letter(i));
  Report rep = verify_restricted_morphism(pres, images, EnvelopeTarget{env}, trials, seed);
  rep.suite = "verify-envelope-embedding";
  return rep;
}

}  // namespace rlr
