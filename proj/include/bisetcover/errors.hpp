#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "bisetcover/biset.hpp"

namespace bisetcover {

// Bad arguments or malformed input (exit code 3 in the CLI).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A min-core query found several inclusion-minimal members: the family is not
// closed the way its oracle claims.
class AmbiguousCoreError : public UsageError {
 public:
  using UsageError::UsageError;
};

// The candidate edges cannot cover the family (exit code 2).
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, std::optional<Biset> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::optional<Biset>& witness() const { return witness_; }

 private:
  std::optional<Biset> witness_;
};

// An algorithmic guarantee failed at run time (exit code 4).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bisetcover
