#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qrec {

/// Tally of one named check over many samples. Only the first few failure
/// witnesses are kept.
struct CheckResult {
  std::string name;
  std::size_t runs = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  bool passed() const noexcept { return failures == 0; }
  void record(bool ok, const std::string& witness) {
    ++runs;
    if (ok) return;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness);
  }

  static constexpr std::size_t kMaxWitnesses = 3;
};

/// Ordered list of checks; lookup by name creates on first use.
struct CheckList {
  std::vector<CheckResult> checks;

  CheckResult& at(const std::string& name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    checks.push_back(CheckResult{name, 0, 0, {}});
    return checks.back();
  }
  bool all_passed() const noexcept {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
  std::size_t failure_count() const noexcept {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures;
    return n;
  }
};

}  // namespace qrec
