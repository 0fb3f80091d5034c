#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rlr {

// Outcome of a single named check.  Only the first counterexample is kept.
struct CheckResult {
  std::string name;
  bool passed = true;
  int trials = 0;
  std::vector<std::pair<std::string, std::string>> notes;

  void fail(std::vector<std::pair<std::string, std::string>> counterexample) {
    if (!passed) return;
    passed = false;
    notes = std::move(counterexample);
  }
};

// Deterministic, line-oriented verification report.  Rendering the same
// report twice yields byte-identical text; checks appear in insertion
// order, which callers keep fixed by name.
struct Report {
  std::string suite;
  std::string subject;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  CheckResult& add_check(std::string name) {
    CheckResult c;
    c.name = std::move(name);
    checks.push_back(std::move(c));
    return checks.back();
  }

  void absorb(const Report& other) {
    for (const CheckResult& c : other.checks) checks.push_back(c);
  }

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }

  std::string render() const;
};

}  // namespace rlr
