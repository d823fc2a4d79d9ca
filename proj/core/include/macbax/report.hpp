#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

namespace macbax {

// Outcome of an identity sweep.  Only the first failure is kept as witness.
struct Report {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  long cases = 0;
  long failures = 0;
  std::string witness;

  Report() = default;
  explicit Report(std::string n) : name(std::move(n)) {}

  bool pass() const { return failures == 0; }
  void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }

  // Count one case; record the witness produced by w() on the first failure.
  template <std::invocable W>
  bool check(bool ok, W&& w) {
    ++cases;
    if (!ok) {
      if (failures == 0) witness = w();
      ++failures;
    }
    return ok;
  }
  bool check(bool ok, const std::string& w) {
    return check(ok, [&] { return w; });
  }

  // Fold a sub-report into this one (cases and failures add up).
  void absorb(const Report& sub) {
    cases += sub.cases;
    if (sub.failures > 0 && failures == 0)
      witness = sub.name.empty() ? sub.witness : sub.name + ": " + sub.witness;
    failures += sub.failures;
  }
};

}  // namespace macbax
