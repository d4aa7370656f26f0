#pragma once

#include <stdexcept>
#include <string>

namespace rigged {

/// Raised when caller-supplied data violates a documented precondition
/// (inadmissible configuration, malformed rigging, out-of-range level...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal invariant fails. Seeing one of these means a bug
/// in this library, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// True when RIGGED_DEBUG=1 is set in the environment. Enables the
/// double-computation checks in kappa and pass_particle.
bool debug_checks_enabled();

}  // namespace rigged
