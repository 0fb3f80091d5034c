#include "doctest.h"

#include <stdexcept>

#include "rlr/envelope.hpp"
#include "rlr/envelope_checks.hpp"

using namespace rlr;

namespace {

RingElement pe(const RingSpec& spec, const char* text) {
  return parse_ring_element(spec, text);
}

PolyEnvelope::Word word(const PolyEnvelope& env, std::initializer_list<int> letters) {
  PolyEnvelope::Word w;
  for (int i : letters) w.push_back(env.letter_atom(i));
  return w;
}

// a random short word mixing letters and scalars
PolyEnvelope::Word random_word(SplitMix64& rng, const PolyEnvelope& env,
                               const LRPresentation& pres, int len) {
  PolyEnvelope::Word w;
  for (int i = 0; i < len; ++i) {
    if (rng.below(3) == 0)
      w.push_back(env.scalar_atom(random_nonzero_ring_element(rng, pres.ring)));
    else
      w.push_back(env.letter_atom(static_cast<int>(rng.below(pres.rank))));
  }
  return w;
}

PolyEnvelope::Element random_env_element(SplitMix64& rng, const PolyEnvelope& env,
                                         const LRPresentation& pres, std::uint32_t max_deg) {
  PolyEnvelope::Element out = env.zero();
  int terms = 1 + static_cast<int>(rng.below(2));
  for (int t = 0; t < terms; ++t) {
    PBWMonomial m;
    std::uint32_t left = max_deg == 0 ? 0 : static_cast<std::uint32_t>(rng.below(max_deg + 1));
    for (int i = 0; i < pres.rank && left > 0; ++i) {
      std::uint32_t e = static_cast<std::uint32_t>(rng.below(left + 1));
      if (env.mode() == EnvMode::restricted) e = std::min(e, env.prime() - 1);
      if (e > 0) m.factors.emplace_back(i, e);
      left -= e;
    }
    env.accumulate(out, m, random_nonzero_ring_element(rng, pres.ring));
  }
  return out;
}

}  // namespace

TEST_CASE("straightening the defining relation: D t = t D + 1") {
  LRPresentation witt = build_witt(3);
  for (EnvMode mode : {EnvMode::full, EnvMode::restricted}) {
    PolyEnvelope env = make_envelope(witt, mode);
    PolyEnvelope::Word w{env.letter_atom(0), env.scalar_atom(pe(witt.ring, "t"))};
    CHECK(env.to_string(env.straighten(w)) == "t*D + 1");
  }
}

TEST_CASE("straightening D (t D) gives t D^2 + D") {
  LRPresentation witt = build_witt(3);
  PolyEnvelope env = make_envelope(witt, EnvMode::full);
  PolyEnvelope::Word w{env.letter_atom(0), env.scalar_atom(pe(witt.ring, "t")),
                       env.letter_atom(0)};
  CHECK(env.to_string(env.straighten(w)) == "t*D^2 + D");
}

TEST_CASE("normal words are fixed points of straightening") {
  LRPresentation witt = build_witt(3);
  PolyEnvelope env = make_envelope(witt, EnvMode::full);
  PolyEnvelope::Word w{env.scalar_atom(pe(witt.ring, "2*t^2")), env.letter_atom(0),
                       env.letter_atom(0)};
  PBWMonomial m;
  m.factors.emplace_back(0, 2);
  CHECK(env.equal(env.straighten(w), env.scale(pe(witt.ring, "2*t^2"), env.monomial(m))));
}

TEST_CASE("restricted mode truncates letter powers through the p-operation") {
  LRPresentation witt = build_witt(3);
  PolyEnvelope u = make_envelope(witt, EnvMode::restricted);
  // D^2 * D = D^3 -> image of D^[3] = 0
  CHECK(u.is_zero(u.multiply(u.straighten(word(u, {0, 0})), u.letter(0))));

  PolyEnvelope U = make_envelope(witt, EnvMode::full);
  PBWMonomial d3;
  d3.factors.emplace_back(0, 3);
  CHECK(U.equal(U.multiply(U.straighten(word(U, {0, 0})), U.letter(0)), U.monomial(d3)));
}

TEST_CASE("unit laws") {
  LRPresentation alg = build_derivation_algebra(RingSpec(2, 2, true));
  PolyEnvelope env = make_envelope(alg, EnvMode::restricted);
  SplitMix64 rng(31);
  for (int i = 0; i < 20; ++i) {
    PolyEnvelope::Element a = random_env_element(rng, env, alg, 2);
    CHECK(env.equal(env.multiply(env.unit(), a), a));
    CHECK(env.equal(env.multiply(a, env.unit()), a));
  }
}

TEST_CASE("multiplication is associative in both modes") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    LRPresentation alg =
        p == 2 ? build_derivation_algebra(RingSpec(2, 2, true)) : build_witt(p);
    for (EnvMode mode : {EnvMode::full, EnvMode::restricted}) {
      PolyEnvelope env = make_envelope(alg, mode);
      SplitMix64 rng(100 + p + (mode == EnvMode::full ? 1 : 0));
      for (int i = 0; i < 200; ++i) {
        PolyEnvelope::Element a = random_env_element(rng, env, alg, 2);
        PolyEnvelope::Element b = random_env_element(rng, env, alg, 2);
        PolyEnvelope::Element c = random_env_element(rng, env, alg, 2);
        CHECK(env.equal(env.multiply(env.multiply(a, b), c),
                        env.multiply(a, env.multiply(b, c))));
      }
    }
  }
}

TEST_CASE("soundness: rewriting respects the defining relations") {
  LRPresentation alg = build_derivation_algebra(RingSpec(3, 2, true));
  PolyEnvelope env = make_envelope(alg, EnvMode::full);
  SplitMix64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    PolyEnvelope::Word w = random_word(rng, env, alg, 4);
    std::size_t pos = rng.below(w.size() - 1);
    PolyEnvelope::Element direct = env.straighten(w);
    if (env.is_letter(w[pos]) && env.is_letter(w[pos + 1])) {
      // x_a x_b = x_b x_a + [x_a, x_b]
      int a = env.letter_of(w[pos]);
      int b = env.letter_of(w[pos + 1]);
      PolyEnvelope::Word swapped = w;
      std::swap(swapped[pos], swapped[pos + 1]);
      PolyEnvelope::Element sum = env.straighten(swapped);
      for (int k = 0; k < alg.rank; ++k) {
        const RingElement& c = alg.bracket_sc[a][b][k];
        if (c.is_zero()) continue;
        PolyEnvelope::Word corr(w.begin(), w.begin() + pos);
        corr.push_back(env.scalar_atom(c));
        corr.push_back(env.letter_atom(k));
        corr.insert(corr.end(), w.begin() + pos + 2, w.end());
        sum = env.add(sum, env.straighten(corr));
      }
      CHECK(env.equal(direct, sum));
    } else if (env.is_letter(w[pos]) && !env.is_letter(w[pos + 1])) {
      // x_i r = r x_i + eps(x_i)(r)
      int i = env.letter_of(w[pos]);
      RingElement r = env.scalar_of(w[pos + 1]);
      PolyEnvelope::Word swapped = w;
      std::swap(swapped[pos], swapped[pos + 1]);
      PolyEnvelope::Element sum = env.straighten(swapped);
      PolyEnvelope::Word corr(w.begin(), w.begin() + pos);
      corr.push_back(env.scalar_atom(derive(alg.anchor_img[i], r)));
      corr.insert(corr.end(), w.begin() + pos + 2, w.end());
      sum = env.add(sum, env.straighten(corr));
      CHECK(env.equal(direct, sum));
    }
  }
}

TEST_CASE("central elements of the full envelope") {
  // rank-one derivation algebra over non-truncated F_3[t]: z = D^3
  LRPresentation alg = build_derivation_algebra(RingSpec(3, 1, false));
  PolyEnvelope env = make_envelope(alg, EnvMode::full);
  PBWMonomial d3;
  d3.factors.emplace_back(0, 3);
  CHECK(env.equal(central_z(env, 0), env.monomial(d3)));

  // abelian with x^[3] = x: z = x^3 - x
  LRPresentation ab = build_abelian(RingSpec(3, 1, true), 1);
  PolyEnvelope env2 = make_envelope(ab, EnvMode::full);
  PBWMonomial x3;
  x3.factors.emplace_back(0, 3);
  PolyEnvelope::Element expected =
      env2.sub(env2.monomial(x3), env2.monomial(PBWMonomial::letter(0)));
  CHECK(env2.equal(central_z(env2, 0), expected));
}

TEST_CASE("centrality certificates on the test algebras") {
  CHECK(verify_centrality(build_witt(2)).all_passed());
  CHECK(verify_centrality(build_witt(3)).all_passed());
  CHECK(verify_centrality(build_witt(5)).all_passed());
  CHECK(verify_centrality(build_derivation_algebra(RingSpec(2, 2, true))).all_passed());
  CHECK(verify_centrality(build_derivation_algebra(RingSpec(3, 2, true))).all_passed());
  CHECK(verify_centrality(build_abelian(RingSpec(3, 1, true), 3)).all_passed());
  CHECK(verify_centrality(build_derivation_algebra(RingSpec(3, 1, false))).all_passed());
}

TEST_CASE("z-basis: one substitution step on D^4") {
  LRPresentation alg = build_derivation_algebra(RingSpec(3, 1, false));
  PolyEnvelope env = make_envelope(alg, EnvMode::full);
  PBWMonomial d4;
  d4.factors.emplace_back(0, 4);
  auto z = to_z_basis(env, env.monomial(d4));
  REQUIRE(z.size() == 1);
  const auto& [zm, c] = *z.begin();
  CHECK(zm.factors == std::vector<std::tuple<int, std::uint32_t, std::uint32_t>>{{0, 1, 1}});
  CHECK(c.is_one());
  CHECK(env.equal(from_z_basis(env, z), env.monomial(d4)));
}

TEST_CASE("z-basis: low exponents pass through unchanged") {
  LRPresentation witt = build_witt(3);
  PolyEnvelope env = make_envelope(witt, EnvMode::full);
  SplitMix64 rng(53);
  for (int i = 0; i < 20; ++i) {
    PolyEnvelope::Element a = random_env_element(rng, env, witt, 2);
    auto z = to_z_basis(env, a);
    for (const auto& [zm, c] : z)
      for (const auto& [idx, ze, xe] : zm.factors) CHECK(ze == 0);
    CHECK(env.equal(from_z_basis(env, z), a));
  }
}

TEST_CASE("z-basis round-trip and filtration preservation") {
  for (std::uint32_t p : {2u, 3u}) {
    LRPresentation alg = p == 2 ? build_derivation_algebra(RingSpec(2, 2, true))
                                : build_abelian(RingSpec(3, 1, true), 2);
    PolyEnvelope env = make_envelope(alg, EnvMode::full);
    SplitMix64 rng(1000 + p);
    for (int i = 0; i < 100; ++i) {
      PolyEnvelope::Element a = random_env_element(rng, env, alg, 2 * p);
      auto z = to_z_basis(env, a);
      CHECK(env.equal(from_z_basis(env, z), a));
      if (!a.empty()) CHECK(filtration_degree(env, z) == std::prev(a.end())->first.degree());
    }
  }
}

TEST_CASE("restricted basis enumeration") {
  CHECK(restricted_basis(1, 3).size() == 3);  // 1, D, D^2
  CHECK(restricted_basis(2, 2).size() == 4);  // 1, x1, x2, x1 x2
  CHECK(restricted_basis(0, 5).size() == 1);  // 1
  auto basis = restricted_basis(1, 3);
  CHECK(basis[0].is_unit());
  CHECK(basis[1] == PBWMonomial::letter(0));
  PBWMonomial d2;
  d2.factors.emplace_back(0, 2);
  CHECK(basis[2] == d2);
}

TEST_CASE("closure certificate counts the F_p-dimension") {
  ClosureCertificate w3 = closure_certificate(build_witt(3));
  CHECK(w3.closed);
  CHECK(w3.basis_rank == 3);
  CHECK(w3.fp_dimension == 9);

  ClosureCertificate w2 = closure_certificate(build_witt(2));
  CHECK(w2.closed);
  CHECK(w2.fp_dimension == 4);

  ClosureCertificate d22 = closure_certificate(build_derivation_algebra(RingSpec(2, 2, true)));
  CHECK(d22.closed);
  CHECK(d22.basis_rank == 4);
  CHECK(d22.fp_dimension == 16);

  CHECK_THROWS_AS(closure_certificate(build_derivation_algebra(RingSpec(3, 1, false))),
                  std::invalid_argument);
}

TEST_CASE("scalar compatibility of powers in the full envelope") {
  // (tD)^3 = t^3 D^3 + t D over F_3[t]
  LRPresentation alg = build_derivation_algebra(RingSpec(3, 1, false));
  PolyEnvelope env = make_envelope(alg, EnvMode::full);
  PolyEnvelope::Element td = env.scale(pe(alg.ring, "t"), env.letter(0));
  CHECK(env.to_string(env.power(td, 3)) == "t^3*D^3 + t*D");
  CHECK(verify_hochschild_in_envelope(alg, 60, 42).all_passed());
  CHECK(verify_hochschild_in_envelope(build_witt(2), 40, 42).all_passed());
  CHECK(verify_hochschild_in_envelope(build_abelian(RingSpec(5, 1, true), 2), 20, 42)
            .all_passed());
}

TEST_CASE("the embedding into the restricted envelope is restricted") {
  LRPresentation witt = build_witt(3);
  PolyEnvelope u = make_envelope(witt, EnvMode::restricted);
  // iota(D)^3 = 0 and iota(tD)^3 = iota(tD)
  CHECK(u.is_zero(u.power(u.letter(0), 3)));
  PolyEnvelope::Element td = u.scale(pe(witt.ring, "t"), u.letter(0));
  CHECK(u.equal(u.power(td, 3), td));

  CHECK(verify_envelope_embedding(witt, 40, 42).all_passed());
  CHECK(verify_envelope_embedding(build_derivation_algebra(RingSpec(2, 2, true)), 40, 42)
            .all_passed());

  // [iota_L(a), iota_R(r)] = iota_R(eps(a)(r))
  SplitMix64 rng(71);
  for (int i = 0; i < 30; ++i) {
    LRElement a = random_lr_element(rng, witt);
    RingElement r = random_ring_element(rng, witt.ring);
    PolyEnvelope::Element lhs = u.commutator(u.embed(a.coords), u.scalar(r));
    CHECK(u.equal(lhs, u.scalar(derive(lr_anchor(witt, a), r))));
  }
}

TEST_CASE("envelope printing uses the canonical order") {
  LRPresentation alg = build_derivation_algebra(RingSpec(3, 2, true));
  PolyEnvelope env = make_envelope(alg, EnvMode::restricted);
  PolyEnvelope::Element e = env.add(env.letter(1), env.letter(0));
  e = env.add(e, env.scale(pe(alg.ring, "t1 + 1"), env.unit()));
  CHECK(env.to_string(e) == "x1 + x2 + t1 + 1");
  PBWMonomial m;
  m.factors.emplace_back(0, 1);
  m.factors.emplace_back(1, 2);
  CHECK(env.to_string(env.scale(pe(alg.ring, "2*t2"), env.monomial(m))) == "2*t2*x1 x2^2");
}
