#pragma once

#include <stdexcept>
#include <string>

namespace mixkin {

/// Invalid configuration or input shape. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure (solver breakdown, resource guard, degenerate input).
/// CLI exit code 3.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematical inequality that should hold was violated. CLI exit code 4.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mixkin
