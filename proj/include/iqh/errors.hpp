#pragma once

#include <stdexcept>
#include <string>

namespace iqh {

/// Structural misuse of the API: mismatched mode registries, bad letter
/// maps, tables that do not cover a phrase.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input data: momenta off the mass shell, non-Hermitian bracket
/// tables, malformed rational strings.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical domain of an operation (non-lightlike
/// momentum, matrix that does not fix k, non-positive-definite metric).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented precondition does not hold for the given state.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace iqh
