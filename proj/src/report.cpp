#include "rlr/report.hpp"

namespace rlr {

std::string Report::render() const {
  std::string out;
  out += "suite: " + suite + "\n";
  out += "subject: " + subject + "\n";
  out += "seed: " + std::to_string(seed) + "\n";
  for (const CheckResult& c : checks) {
    out += "check: " + c.name + "\n";
    out += std::string("  status: ") + (c.passed ? "pass" : "fail") + "\n";
    out += "  trials: " + std::to_string(c.trials) + "\n";
    for (const auto& [k, v] : c.notes) out += "  " + k + ": " + v + "\n";
  }
  out += std::string("result: ") + (all_passed() ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace rlr
