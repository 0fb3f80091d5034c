#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rlr/lie_rinehart.hpp"

namespace rlr {

// Parse failure with a 1-based source location.
struct SpecError : std::runtime_error {
  int line;
  int col;
  SpecError(int line_, int col_, const std::string& msg)
      : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// Algebra spec file: a ring section (p, nvars, truncated), then either a
// builtin selector (witt, derivations, abelian) or an explicit algebra
// section (rank plus c[i,j,k] / anchor[i,j] / pop[i,k] entries in the
// polynomial grammar), and an optional list of multiplicative-set
// generators.  Keys may appear in any order, one per line; '#' starts a
// comment.  Unlisted entries are zero; indices are 1-based.
struct SpecFile {
  std::optional<std::string> builtin;
  LRPresentation presentation;
  std::vector<RingElement> localize_gens;

  bool operator==(const SpecFile&) const = default;
};

SpecFile parse_spec(std::string_view text);

// canonical rendering; parse_spec(print_spec(s)) == s
std::string print_spec(const SpecFile& spec);

}  // namespace rlr
