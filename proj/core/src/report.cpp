#include "clarcube/report.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace clarcube {

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

void VerificationReport::add(CheckResult result) {
  if (!result.pass && result.witness.is_null())
    throw std::logic_error("failing check '" + result.name + "' without witness");
  checks_.push_back(std::move(result));
}

void VerificationReport::run(const std::string& name,
                             const std::function<std::pair<bool, nlohmann::json>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result{name, false, nullptr, 0.0};
  try {
    auto [pass, witness] = body();
    result.pass = pass;
    result.witness = std::move(witness);
    if (!pass && result.witness.is_null()) result.witness = {{"detail", "check returned false"}};
  } catch (const std::exception& e) {
    result.pass = false;
    result.witness = {{"error", e.what()}};
  }
  result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  add(std::move(result));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) add(c);
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  auto sorted = checks_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : sorted)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}, {"ms", with_timing ? c.ms : 0.0}});
  return {{"system", system_}, {"checks", std::move(checks)}};
}

}  // namespace clarcube
