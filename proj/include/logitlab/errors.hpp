#ifndef LOGITLAB_ERRORS_HPP
#define LOGITLAB_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace logitlab {

// Exit-code contract shared by the C API and the CLI.
enum class Status : int {
  ok = 0,
  input_error = 2,      // malformed input, invalid parameter
  cap_exceeded = 3,     // problem size beyond a configured budget
  internal_error = 4,   // internal consistency check failed
};

// Bad user input: malformed files, invalid parameters, payoffs that violate a
// constructor precondition.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A requested exact operation would exceed a configured size budget.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed: two routes to the same quantity disagree
// beyond tolerance, or a certificate is inconsistent. Never silently ignored.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

inline Status status_of(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return Status::input_error;
  if (dynamic_cast<const CapExceeded*>(&e)) return Status::cap_exceeded;
  return Status::internal_error;
}

// Size budgets guarding exact (table- or matrix-building) operations.
// Exceeding a budget raises CapExceeded; it does not silently truncate.
struct Limits {
  std::uint64_t enumeration_cap = 1'000'000;  // full profile-table operations
  std::uint64_t matrix_cap = 4096;            // dense |S| x |S| kernel builds
  std::uint64_t mixing_cap = 1024;            // matrix-power mixing analysis
  std::uint64_t lumped_cap = 10'000;          // magnetization-chain size (players)
  std::uint64_t triple_budget = 1u << 26;     // exhaustive (x,y,z) scans
  std::uint64_t bipartition_exact_cap = 20;   // exact min-weight bipartition search
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace logitlab

#endif  // LOGITLAB_ERRORS_HPP
