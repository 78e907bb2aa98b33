#pragma once

#include <stdexcept>
#include <string>

namespace dirac {

// Caller passed arguments violating an operation's preconditions.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Bad run configuration (unsupported group label, unreadable paths, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A weight claimed to lie in the regular orbit of rho does not.
struct NotInOrbitError : std::runtime_error {
  explicit NotInOrbitError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed embedded or external dataset; loading fails closed.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dirac
