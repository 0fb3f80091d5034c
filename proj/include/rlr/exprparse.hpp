#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "rlr/lie_rinehart.hpp"

namespace rlr {

// One multiplicand in an envelope word: a ring scalar or a basis letter.
using ExprAtom = std::variant<RingElement, int>;
using ExprTerm = std::vector<ExprAtom>;

// Element expressions for the command line: "+"-separated terms, each a
// product of factors written with "*" or juxtaposition.  Factors are ring
// scalars in the polynomial grammar (parenthesized polynomials allowed),
// basis letters x1..xm (alias D when the rank is 1), and ^-powers of
// either.  "D t" is the two-letter word D*t, not t*D.
std::vector<ExprTerm> parse_env_expr(const RingSpec& ring, int rank, std::string_view text);

}  // namespace rlr
