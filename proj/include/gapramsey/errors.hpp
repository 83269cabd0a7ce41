#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace gapramsey {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a feasibility guard would be exceeded. `guard()` names it.
class SizeGuardError : public std::length_error {
 public:
  SizeGuardError(std::string guard, const std::string& what)
      : std::length_error(guard + ": " + what), guard_(std::move(guard)) {}
  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns `fallback` unless RAMSEY_MAX_WORK is set to a positive integer,
/// in which case that value overrides every guard.
inline std::uint64_t work_limit(std::uint64_t fallback) {
  if (const char* env = std::getenv("RAMSEY_MAX_WORK")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

}  // namespace gapramsey
