#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rlr/modular.hpp"

namespace rlr {

// F_p[t_1..t_n], optionally truncated by the relations t_i^p = 0.  The
// truncated quotient is a finite-dimensional F_p-space of dimension p^nvars.
struct RingSpec {
  std::uint32_t p = 3;
  int nvars = 1;
  bool truncated = false;

  RingSpec() = default;
  RingSpec(std::uint32_t p_, int nvars_, bool truncated_);

  bool operator==(const RingSpec&) const = default;

  // "t" for a single generator, "t1", "t2", ... otherwise
  std::string var_name(int j) const;
};

using Exponents = std::vector<std::uint32_t>;

// Total degree first, then lexicographic on the exponent vector.  Maps
// iterate ascending; canonical printing walks them in reverse.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over F_p in canonical form: no stored
// coefficient is zero, and in truncated rings every stored exponent is < p.
class RingElement {
 public:
  using TermMap = std::map<Exponents, Residue, GradedLexLess>;

  explicit RingElement(const RingSpec& spec) : spec_(spec) {}

  static RingElement zero(const RingSpec& spec) { return RingElement(spec); }
  static RingElement constant(const RingSpec& spec, long long c);
  static RingElement variable(const RingSpec& spec, int j, std::uint32_t e = 1);
  static RingElement monomial(const RingSpec& spec, const Exponents& e, long long c);

  const RingSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  // total degree of the leading term; 0 for the zero polynomial
  std::uint32_t total_degree() const;

  // canonicalizing accumulate: reduces mod p, drops truncated monomials,
  // erases cancelled terms
  void add_term(const Exponents& e, long long c);

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  bool operator==(const RingElement& o) const;

  std::string to_string() const;

 private:
  void require_same_ring(const RingElement& o) const;

  RingSpec spec_;
  TermMap terms_;
};

RingElement pow(const RingElement& a, std::uint32_t k);

// r -> r^p.  Scales every exponent by p with coefficients fixed (Frobenius
// is the identity on F_p); in truncated rings every term with a positive
// exponent dies.
RingElement frobenius(const RingElement& r);

// Polynomial grammar: coefficient in 0..p-1, monomial as c*t1^e1*t2^e2*...,
// omitted factors mean exponent 0, "+"-separated, e.g. "2*t1^2*t2 + 1".
// Throws std::invalid_argument with a character position on bad input.
RingElement parse_ring_element(const RingSpec& spec, std::string_view text);

}  // namespace rlr
