#include "rlr/exprparse.hpp"

#include <cctype>
#include <stdexcept>

namespace rlr {

namespace {

struct ExprParser {
  const RingSpec& ring;
  int rank;
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) const {
    throw std::invalid_argument("pos " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
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

  std::uint32_t exponent() {
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      return static_cast<std::uint32_t>(number());
    }
    return 1;
  }

  // a factor: parenthesized polynomial, integer, ring variable, or letter
  void factor(ExprTerm& term) {
    skip_ws();
    if (pos >= text.size()) err("expected factor");
    char c = text[pos];
    if (c == '(') {
      std::size_t depth = 1;
      std::size_t start = ++pos;
      while (pos < text.size() && depth > 0) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')') --depth;
        ++pos;
      }
      if (depth != 0) err("unbalanced parenthesis");
      RingElement r = parse_ring_element(ring, text.substr(start, pos - 1 - start));
      std::uint32_t e = exponent();
      term.emplace_back(pow(r, e));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = number();
      std::uint32_t e = exponent();
      term.emplace_back(
          pow(RingElement::constant(ring, static_cast<long long>(v % ring.p)), e));
      return;
    }
    if (c == 't') {
      ++pos;
      int j = 0;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        j = static_cast<int>(number()) - 1;
      if (j < 0 || j >= ring.nvars) err("ring generator index out of range");
      term.emplace_back(RingElement::variable(ring, j, exponent()));
      return;
    }
    if (c == 'D') {
      ++pos;
      if (rank != 1) err("letter alias D needs a rank-1 algebra");
      std::uint32_t e = exponent();
      for (std::uint32_t k = 0; k < e; ++k) term.emplace_back(0);
      return;
    }
    if (c == 'x') {
      ++pos;
      int i = static_cast<int>(number()) - 1;
      if (i < 0 || i >= rank) err("basis letter index out of range");
      std::uint32_t e = exponent();
      for (std::uint32_t k = 0; k < e; ++k) term.emplace_back(i);
      return;
    }
    err("expected scalar, ring generator, or basis letter");
  }

  std::vector<ExprTerm> parse() {
    std::vector<ExprTerm> terms;
    if (at_end()) err("empty expression");
    for (;;) {
      ExprTerm term;
      bool negate = false;
      while (peek() == '-') {
        ++pos;
        negate = !negate;
      }
      factor(term);
      while (!at_end() && peek() != '+' && peek() != '-') {
        if (peek() == '*') ++pos;
        factor(term);
      }
      if (negate) term.insert(term.begin(), RingElement::constant(ring, -1));
      terms.push_back(std::move(term));
      if (at_end()) break;
      if (peek() == '+') {
        ++pos;
      }
      // a '-' starts the next term and is consumed there
    }
    return terms;
  }
};

}  // namespace

std::vector<ExprTerm> parse_env_expr(const RingSpec& ring, int rank, std::string_view text) {
  ExprParser parser{ring, rank, text};
  return parser.parse();
}

}  // namespace rlr
