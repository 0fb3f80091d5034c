#include "rlr/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace rlr {

RingSpec::RingSpec(std::uint32_t p_, int nvars_, bool truncated_)
    : p(p_), nvars(nvars_), truncated(truncated_) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (nvars < 0) throw std::invalid_argument("nvars must be nonnegative");
}

std::string RingSpec::var_name(int j) const {
  if (nvars == 1) return "t";
  return "t" + std::to_string(j + 1);
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

RingElement RingElement::constant(const RingSpec& spec, long long c) {
  RingElement r(spec);
  r.add_term(Exponents(spec.nvars, 0), c);
  return r;
}

RingElement RingElement::variable(const RingSpec& spec, int j, std::uint32_t e) {
  if (j < 0 || j >= spec.nvars) throw std::invalid_argument("variable index out of range");
  RingElement r(spec);
  Exponents exp(spec.nvars, 0);
  exp[j] = e;
  r.add_term(exp, 1);
  return r;
}

RingElement RingElement::monomial(const RingSpec& spec, const Exponents& e, long long c) {
  if (static_cast<int>(e.size()) != spec.nvars)
    throw std::invalid_argument("exponent vector has wrong length");
  RingElement r(spec);
  r.add_term(e, c);
  return r;
}

bool RingElement::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1) return false;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint32_t RingElement::total_degree() const {
  if (terms_.empty()) return 0;
  const Exponents& e = std::prev(terms_.end())->first;
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

void RingElement::add_term(const Exponents& e, long long c) {
  Residue r = reduce_mod(c, spec_.p);
  if (r == 0) return;
  if (spec_.truncated) {
    for (std::uint32_t x : e)
      if (x >= spec_.p) return;  // t_i^p = 0
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, r);
  } else {
    it->second = add_mod(it->second, r, spec_.p);
    if (it->second == 0) terms_.erase(it);
  }
}

void RingElement::require_same_ring(const RingElement& o) const {
  if (!(spec_ == o.spec_)) throw std::invalid_argument("mixed-ring operands");
}

RingElement RingElement::operator-() const {
  RingElement r(spec_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, neg_mod(c, spec_.p));
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, static_cast<long long>(o.spec_.p) - c);
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.require_same_ring(b);
  RingElement r(a.spec_);
  Exponents e(a.spec_.nvars);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int j = 0; j < a.spec_.nvars; ++j) e[j] = ea[j] + eb[j];
      r.add_term(e, mul_mod(ca, cb, a.spec_.p));
    }
  return r;
}

bool RingElement::operator==(const RingElement& o) const {
  require_same_ring(o);
  return terms_ == o.terms_;
}

RingElement pow(const RingElement& a, std::uint32_t k) {
  RingElement r = RingElement::constant(a.spec(), 1);
  RingElement base = a;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

RingElement frobenius(const RingElement& r) {
  const RingSpec& spec = r.spec();
  RingElement out(spec);
  Exponents e(spec.nvars);
  for (const auto& [exp, c] : r.terms()) {
    for (int j = 0; j < spec.nvars; ++j) e[j] = exp[j] * spec.p;
    out.add_term(e, c);
  }
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto& [e, c] = *it;
    std::string factors;
    for (int j = 0; j < spec_.nvars; ++j) {
      if (e[j] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += spec_.var_name(j);
      if (e[j] > 1) factors += "^" + std::to_string(e[j]);
    }
    if (factors.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += factors;
    } else {
      out += std::to_string(c) + "*" + factors;
    }
  }
  return out;
}

namespace {

struct PolyParser {
  const RingSpec& spec;
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) const {
    throw std::invalid_argument("pos " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      err("expected number");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000000ULL) err("number too large");
      ++pos;
    }
    return v;
  }

  // t or t<k>, optionally followed by ^e
  void var_power(Exponents& e) {
    skip_ws();
    ++pos;  // 't' already checked
    int j = 0;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      j = static_cast<int>(number()) - 1;
    }
    if (j < 0 || j >= spec.nvars) err("ring generator index out of range");
    std::uint32_t k = 1;
    if (eat('^')) k = static_cast<std::uint32_t>(number());
    e[j] += k;
  }

  void term(RingElement& acc, bool negate) {
    long long coeff = 1;
    Exponents e(spec.nvars, 0);
    bool any = false;
    for (;;) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::uint64_t v = number();
        if (eat('^')) {
          std::uint64_t k = number();
          v = pow_mod(static_cast<Residue>(v % spec.p), k, spec.p);
        }
        coeff = static_cast<long long>(
            mul_mod(reduce_mod(static_cast<long long>(coeff), spec.p),
                    reduce_mod(static_cast<long long>(v % spec.p), spec.p), spec.p));
        any = true;
      } else if (pos < text.size() && text[pos] == 't') {
        var_power(e);
        any = true;
      } else {
        err("expected coefficient or ring generator");
      }
      if (!eat('*')) break;
    }
    if (!any) err("empty term");
    acc.add_term(e, negate ? -coeff : coeff);
  }

  RingElement parse() {
    RingElement acc(spec);
    skip_ws();
    if (pos >= text.size()) err("empty polynomial");
    bool neg = eat('-');
    term(acc, neg);
    for (;;) {
      skip_ws();
      if (pos >= text.size()) break;
      if (eat('+')) {
        term(acc, false);
      } else if (eat('-')) {
        term(acc, true);
      } else {
        err("expected '+' between terms");
      }
    }
    return acc;
  }
};

}  // namespace

RingElement parse_ring_element(const RingSpec& spec, std::string_view text) {
  PolyParser parser{spec, text};
  return parser.parse();
}

}  // namespace rlr
