#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace clarcube {

/// Malformed `.hex` or JSON input. `line()` is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structurally valid input that violates a domain invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The system has no perfect matching, so no Clar cover exists.
class NotKekuleanError : public ValidationError {
 public:
  NotKekuleanError() : ValidationError("system has no Clar cover (no perfect matching)") {}
};

/// An enumeration exceeded its configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A checked mathematical claim did not hold on the given input.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A directed cycle found where the orientation must be acyclic.
class CycleFoundError : public VerificationError {
 public:
  explicit CycleFoundError(std::vector<int> cycle)
      : VerificationError("directed cycle of length " + std::to_string(cycle.size())),
        cycle_(std::move(cycle)) {}
  const std::vector<int>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<int> cycle_;
};

}  // namespace clarcube
