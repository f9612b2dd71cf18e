#pragma once

#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace clarcube {

struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::json witness;  // null, or counterexample / supporting data
  double ms = 0.0;
};

/// Outcome of a batch of named checks on one system. Any failing entry
/// carries a non-null witness.
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string system) : system_(std::move(system)) {}

  const std::string& system() const noexcept { return system_; }
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  bool passed() const noexcept;
  const CheckResult* find(const std::string& name) const;

  /// Throws std::logic_error when a failing check has no witness.
  void add(CheckResult result);

  /// Times `body`, which returns (pass, witness). An exception thrown by the
  /// body becomes a failure whose witness is the error message.
  void run(const std::string& name, const std::function<std::pair<bool, nlohmann::json>()>& body);

  void merge(const VerificationReport& other);

  /// {"system": str, "checks": [{"name", "pass", "witness", "ms"}]}, checks
  /// sorted by name. Without timing every "ms" is 0 so output is byte-stable.
  nlohmann::json to_json(bool with_timing = true) const;

 private:
  std::string system_;
  std::vector<CheckResult> checks_;
};

}  // namespace clarcube
