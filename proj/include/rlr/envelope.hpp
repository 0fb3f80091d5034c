#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "rlr/fraction.hpp"
#include "rlr/lie_rinehart.hpp"

namespace rlr {

// Ordered PBW monomial x_{i_1}^{e_1} ... x_{i_l}^{e_l}: indices strictly
// increasing, exponents >= 1.  The empty product is the unit monomial.
struct PBWMonomial {
  std::vector<std::pair<int, std::uint32_t>> factors;

  static PBWMonomial unit() { return {}; }
  static PBWMonomial letter(int i) { return PBWMonomial{{{i, 1}}}; }

  bool is_unit() const { return factors.empty(); }
  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& [i, e] : factors) d += e;
    return d;
  }

  // graded order, then lexicographic on the flattened letter word
  bool operator<(const PBWMonomial& o) const;
  bool operator==(const PBWMonomial& o) const { return factors == o.factors; }
};

// Alternate basis monomial z_{i}^{d_i} x_{i}^{e_i} with 0 <= d_i,
// 0 <= e_i < p and d_i + e_i > 0 per used index.
struct ZMonomial {
  std::vector<std::tuple<int, std::uint32_t, std::uint32_t>> factors;  // (index, zexp, xexp)

  // the filtration degree p*sum(d_i) + sum(e_i)
  std::uint32_t filtration_degree(std::uint32_t p) const {
    std::uint32_t d = 0;
    for (const auto& [i, z, x] : factors) d += z * p + x;
    return d;
  }

  bool operator<(const ZMonomial& o) const { return factors < o.factors; }
  bool operator==(const ZMonomial& o) const { return factors == o.factors; }
};

// U(R,L) mode has unbounded exponents; u(R,L) mode rewrites x_i^p to the
// image of the p-operation, keeping every exponent < p.
enum class EnvMode { full, restricted };

// Coefficient plumbing for the straightening engine over R itself.
struct PolyEnvOps {
  LRPresentation pres;
  using Coeff = RingElement;

  int rank() const { return pres.rank; }
  std::uint32_t prime() const { return pres.ring.p; }
  Coeff zero() const { return RingElement::zero(pres.ring); }
  Coeff one() const { return RingElement::constant(pres.ring, 1); }
  Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
  Coeff neg(const Coeff& a) const { return -a; }
  bool is_zero(const Coeff& a) const { return a.is_zero(); }
  bool equal(const Coeff& a, const Coeff& b) const { return a == b; }
  Coeff anchor_act(int i, const Coeff& c) const { return derive(pres.anchor_img[i], c); }
  Coeff bracket_coeff(int i, int j, int k) const { return pres.bracket_sc[i][j][k]; }
  Coeff pop_coeff(int i, int k) const { return pres.pop_img[i][k]; }
  std::string coeff_str(const Coeff& c) const { return c.to_string(); }
};

// Same engine over the fraction ring R_S: scalars are fractions and the
// anchor acts through the quotient rule.
struct FracEnvOps {
  LRPresentation pres;
  using Coeff = Fraction;

  int rank() const { return pres.rank; }
  std::uint32_t prime() const { return pres.ring.p; }
  Coeff zero() const { return Fraction::zero(pres.ring); }
  Coeff one() const { return Fraction::one(pres.ring); }
  Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
  Coeff neg(const Coeff& a) const { return -a; }
  bool is_zero(const Coeff& a) const { return a.is_zero(); }
  bool equal(const Coeff& a, const Coeff& b) const { return a == b; }
  Coeff anchor_act(int i, const Coeff& c) const {
    return derivation_on_fraction(pres.anchor_img[i], c);
  }
  Coeff bracket_coeff(int i, int j, int k) const {
    return Fraction::of(pres.bracket_sc[i][j][k]);
  }
  Coeff pop_coeff(int i, int k) const { return Fraction::of(pres.pop_img[i][k]); }
  std::string coeff_str(const Coeff& c) const { return c.to_string(); }
};

// The enveloping algebra of a presented algebra, realized as the free left
// R-module on PBW monomials with multiplication by straightening:
//   (R1)  x_i r   -> r x_i + eps(x_i)(r)
//   (R2)  x_j x_i -> x_i x_j + [x_j, x_i]          (j > i)
//   (R3)  adjacent scalars merge
//   (R4)  x_i^p   -> image of x_i^[p]              (restricted mode only)
// Rules are applied leftmost-first on a worklist of words; each application
// strictly decreases (letter degree, inversions, scalar inversions, atom
// count), so rewriting terminates.  Normal forms are unique on the tested
// algebras (associativity certificates in the test suite).
template <class Ops>
class Envelope {
 public:
  using Coeff = typename Ops::Coeff;
  using Element = std::map<PBWMonomial, Coeff>;

  // a word atom is a basis letter (by index) or a ring scalar
  using Atom = std::variant<int, Coeff>;
  using Word = std::vector<Atom>;

  Envelope(Ops ops, EnvMode mode) : ops_(std::move(ops)), mode_(mode) {}

  const Ops& ops() const { return ops_; }
  EnvMode mode() const { return mode_; }
  std::uint32_t prime() const { return ops_.prime(); }

  static bool is_letter(const Atom& a) { return std::holds_alternative<int>(a); }
  static int letter_of(const Atom& a) { return std::get<int>(a); }
  static const Coeff& scalar_of(const Atom& a) { return std::get<Coeff>(a); }

  static Atom letter_atom(int i) { return Atom{std::in_place_index<0>, i}; }
  static Atom scalar_atom(Coeff c) { return Atom{std::in_place_index<1>, std::move(c)}; }

  Element zero() const { return {}; }
  Element unit() const { return scalar(ops_.one()); }
  Element scalar(const Coeff& c) const {
    Element e;
    if (!ops_.is_zero(c)) e.emplace(PBWMonomial::unit(), c);
    return e;
  }
  Element letter(int i) const {
    Element e;
    e.emplace(PBWMonomial::letter(i), ops_.one());
    return e;
  }
  Element monomial(const PBWMonomial& m) const {
    Element e;
    e.emplace(m, ops_.one());
    return e;
  }

  // iota_L of a coordinate vector: sum coeff_i * x_i
  Element embed(const std::vector<Coeff>& coords) const {
    Element e;
    for (int i = 0; i < ops_.rank(); ++i)
      if (!ops_.is_zero(coords[i])) e.emplace(PBWMonomial::letter(i), coords[i]);
    return e;
  }

  bool is_zero(const Element& a) const { return a.empty(); }

  bool equal(const Element& a, const Element& b) const {
    if (a.size() != b.size()) return false;
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first)) return false;
      if (!ops_.equal(ia->second, ib->second)) return false;
    }
    return true;
  }

  void accumulate(Element& into, const PBWMonomial& m, const Coeff& c) const {
    if (ops_.is_zero(c)) return;
    auto it = into.find(m);
    if (it == into.end()) {
      into.emplace(m, c);
    } else {
      it->second = ops_.add(it->second, c);
      if (ops_.is_zero(it->second)) into.erase(it);
    }
  }

  Element add(const Element& a, const Element& b) const {
    Element out = a;
    for (const auto& [m, c] : b) accumulate(out, m, c);
    return out;
  }

  Element sub(const Element& a, const Element& b) const {
    Element out = a;
    for (const auto& [m, c] : b) accumulate(out, m, ops_.neg(c));
    return out;
  }

  Element negate(const Element& a) const {
    Element out;
    for (const auto& [m, c] : a) out.emplace(m, ops_.neg(c));
    return out;
  }

  // left scalar multiple; coefficients live on the left by convention
  Element scale(const Coeff& r, const Element& a) const {
    Element out;
    for (const auto& [m, c] : a) accumulate(out, m, ops_.mul(r, c));
    return out;
  }

  // Rewrites an arbitrary word in scalars and letters to PBW normal form.
  Element straighten(const Word& start) const {
    Element out;
    std::vector<Word> work;
    push_live(work, start);
    while (!work.empty()) {
      Word w = std::move(work.back());
      work.pop_back();
      if (!rewrite_step(w, work)) collect_normal(out, w);
    }
    return out;
  }

  Element multiply(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Word w;
        w.push_back(scalar_atom(ca));
        append_monomial(w, ma);
        w.push_back(scalar_atom(cb));
        append_monomial(w, mb);
        for (auto& [m, c] : straighten(w)) accumulate(out, m, c);
      }
    return out;
  }

  Element power(const Element& a, std::uint32_t n) const {
    Element out = unit();
    for (std::uint32_t i = 0; i < n; ++i) out = multiply(out, a);
    return out;
  }

  Element commutator(const Element& a, const Element& b) const {
    return sub(multiply(a, b), multiply(b, a));
  }

  std::string letter_name(int i) const {
    return ops_.rank() == 1 ? "D" : "x" + std::to_string(i + 1);
  }

  std::string monomial_str(const PBWMonomial& m) const {
    std::string out;
    for (const auto& [i, e] : m.factors) {
      if (!out.empty()) out += " ";
      out += letter_name(i);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  std::string to_string(const Element& a) const {
    if (a.empty()) return "0";
    std::string out;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += term_str(it->second, monomial_str(it->first));
    }
    return out;
  }

  std::string term_str(const Coeff& c, const std::string& mono) const {
    std::string cs = ops_.coeff_str(c);
    if (mono.empty()) return cs;
    if (ops_.equal(c, ops_.one())) return mono;
    if (cs.find(' ') != std::string::npos) return "(" + cs + ")*" + mono;
    return cs + "*" + mono;
  }

 private:
  static void append_monomial(Word& w, const PBWMonomial& m) {
    for (const auto& [i, e] : m.factors)
      for (std::uint32_t k = 0; k < e; ++k) w.push_back(letter_atom(i));
  }

  // drops words containing a zero scalar (the whole product vanishes)
  void push_live(std::vector<Word>& work, Word w) const {
    for (const Atom& a : w)
      if (!is_letter(a) && ops_.is_zero(scalar_of(a))) return;
    work.push_back(std::move(w));
  }

  // Applies one rewrite at the leftmost redex; returns false if w is normal.
  bool rewrite_step(const Word& w, std::vector<Word>& work) const {
    const std::uint32_t p = prime();
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (pos + 1 < w.size()) {
        const Atom& a = w[pos];
        const Atom& b = w[pos + 1];
        if (!is_letter(a) && !is_letter(b)) {  // R3: merge scalars
          Word m(w.begin(), w.begin() + pos);
          m.push_back(scalar_atom(ops_.mul(scalar_of(a), scalar_of(b))));
          m.insert(m.end(), w.begin() + pos + 2, w.end());
          push_live(work, std::move(m));
          return true;
        }
        if (is_letter(a) && !is_letter(b)) {  // R1: x_i r -> r x_i + eps(x_i)(r)
          Word swapped = w;
          std::swap(swapped[pos], swapped[pos + 1]);
          push_live(work, std::move(swapped));
          Coeff acted = ops_.anchor_act(letter_of(a), scalar_of(b));
          if (!ops_.is_zero(acted)) {
            Word rest(w.begin(), w.begin() + pos);
            rest.push_back(scalar_atom(std::move(acted)));
            rest.insert(rest.end(), w.begin() + pos + 2, w.end());
            push_live(work, std::move(rest));
          }
          return true;
        }
        if (is_letter(a) && is_letter(b) && letter_of(a) > letter_of(b)) {
          // R2: x_j x_i -> x_i x_j + [x_j, x_i]
          Word swapped = w;
          std::swap(swapped[pos], swapped[pos + 1]);
          push_live(work, std::move(swapped));
          for (int k = 0; k < ops_.rank(); ++k) {
            Coeff c = ops_.bracket_coeff(letter_of(a), letter_of(b), k);
            if (ops_.is_zero(c)) continue;
            Word br(w.begin(), w.begin() + pos);
            br.push_back(scalar_atom(std::move(c)));
            br.push_back(letter_atom(k));
            br.insert(br.end(), w.begin() + pos + 2, w.end());
            push_live(work, std::move(br));
          }
          return true;
        }
      }
      // R4: a run of p equal letters collapses to the p-operation image
      if (mode_ == EnvMode::restricted && is_letter(w[pos])) {
        std::size_t run = 1;
        while (pos + run < w.size() && is_letter(w[pos + run]) &&
               letter_of(w[pos + run]) == letter_of(w[pos]))
          ++run;
        if (run >= p) {
          for (int k = 0; k < ops_.rank(); ++k) {
            Coeff c = ops_.pop_coeff(letter_of(w[pos]), k);
            if (ops_.is_zero(c)) continue;
            Word sub(w.begin(), w.begin() + pos);
            sub.push_back(scalar_atom(std::move(c)));
            sub.push_back(letter_atom(k));
            sub.insert(sub.end(), w.begin() + pos + p, w.end());
            push_live(work, std::move(sub));
          }
          return true;
        }
      }
    }
    return false;
  }

  // w has no redex: at most one scalar, at the front, then ascending letters
  void collect_normal(Element& out, const Word& w) const {
    Coeff c = ops_.one();
    PBWMonomial m;
    for (const Atom& a : w) {
      if (!is_letter(a)) {
        assert(m.factors.empty() && "scalar after letters in a normal word");
        c = ops_.mul(c, scalar_of(a));
      } else if (!m.factors.empty() && m.factors.back().first == letter_of(a)) {
        m.factors.back().second += 1;
      } else {
        assert((m.factors.empty() || m.factors.back().first < letter_of(a)) &&
               "letters out of order in a normal word");
        m.factors.emplace_back(letter_of(a), 1);
      }
    }
    accumulate(out, m, c);
  }

  Ops ops_;
  EnvMode mode_;
};

using PolyEnvelope = Envelope<PolyEnvOps>;
using FracEnvelope = Envelope<FracEnvOps>;

inline PolyEnvelope make_envelope(const LRPresentation& pres, EnvMode mode) {
  return PolyEnvelope(PolyEnvOps{pres}, mode);
}

// u(R_S, L_S): the envelope of the localized algebra, with fraction
// coefficients over the original basis
inline FracEnvelope make_fraction_envelope(const LRPresentation& pres, EnvMode mode) {
  return FracEnvelope(FracEnvOps{pres}, mode);
}

// z_i = x_i^p - iota_L(x_i^[p]), central in the full envelope
template <class Ops>
typename Envelope<Ops>::Element central_z(const Envelope<Ops>& env, int i) {
  assert(env.mode() == EnvMode::full);
  PBWMonomial xp;
  xp.factors.emplace_back(i, env.prime());
  typename Envelope<Ops>::Element out = env.monomial(xp);
  for (int k = 0; k < env.ops().rank(); ++k) {
    auto c = env.ops().pop_coeff(i, k);
    if (!env.ops().is_zero(c)) env.accumulate(out, PBWMonomial::letter(k), env.ops().neg(c));
  }
  return out;
}

// expands one z-monomial back into the PBW basis of the full envelope
template <class Ops>
typename Envelope<Ops>::Element expand_z_monomial(const Envelope<Ops>& env, const ZMonomial& zm) {
  assert(env.mode() == EnvMode::full);
  auto out = env.unit();
  PBWMonomial xpart;
  for (const auto& [i, zexp, xexp] : zm.factors) {
    if (zexp > 0) out = env.multiply(out, env.power(central_z(env, i), zexp));
    if (xexp > 0) xpart.factors.emplace_back(i, xexp);
  }
  if (!xpart.factors.empty()) out = env.multiply(out, env.monomial(xpart));
  return out;
}

template <class Ops>
using ZElement = std::map<ZMonomial, typename Ops::Coeff>;

// Triangular change of basis along the filtration: substitute
// x_i^p = z_i + iota_L(x_i^[p]) greedily from the top degree downward.
template <class Ops>
ZElement<Ops> to_z_basis(const Envelope<Ops>& env, typename Envelope<Ops>::Element a) {
  assert(env.mode() == EnvMode::full);
  const std::uint32_t p = env.prime();
  ZElement<Ops> out;
  while (!a.empty()) {
    auto top = std::prev(a.end());
    PBWMonomial m = top->first;
    auto c = top->second;
    ZMonomial zm;
    for (const auto& [i, e] : m.factors) zm.factors.emplace_back(i, e / p, e % p);
    out.emplace(zm, c);
    // the expansion leads with m (coefficient one) plus lower-degree terms
    a = env.sub(a, env.scale(c, expand_z_monomial(env, zm)));
  }
  return out;
}

template <class Ops>
typename Envelope<Ops>::Element from_z_basis(const Envelope<Ops>& env, const ZElement<Ops>& a) {
  auto out = env.zero();
  for (const auto& [zm, c] : a) out = env.add(out, env.scale(c, expand_z_monomial(env, zm)));
  return out;
}

template <class Ops>
std::uint32_t filtration_degree(const Envelope<Ops>& env, const ZElement<Ops>& a) {
  std::uint32_t d = 0;
  for (const auto& [zm, c] : a) d = std::max(d, zm.filtration_degree(env.prime()));
  return d;
}

template <class Ops>
std::string z_to_string(const Envelope<Ops>& env, const ZElement<Ops>& a) {
  if (a.empty()) return "0";
  // z-factors print before x-factors, highest filtration degree first
  std::vector<std::pair<ZMonomial, typename Ops::Coeff>> terms(a.begin(), a.end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    return x.first.filtration_degree(env.prime()) > y.first.filtration_degree(env.prime());
  });
  std::string out;
  for (const auto& [zm, c] : terms) {
    std::string mono;
    for (const auto& [i, zexp, xexp] : zm.factors) {
      if (zexp == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += env.ops().rank() == 1 ? "z" : "z" + std::to_string(i + 1);
      if (zexp > 1) mono += "^" + std::to_string(zexp);
    }
    for (const auto& [i, zexp, xexp] : zm.factors) {
      if (xexp == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += env.letter_name(i);
      if (xexp > 1) mono += "^" + std::to_string(xexp);
    }
    if (!out.empty()) out += " + ";
    out += env.term_str(c, mono);
  }
  return out;
}

// all p^rank truncated monomials, in canonical order
std::vector<PBWMonomial> restricted_basis(int rank, std::uint32_t p);

}  // namespace rlr
