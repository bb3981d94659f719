#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "grlab/cube.hpp"

namespace grlab {

// Bad configuration: malformed input, invalid enumeration mode for a grid,
// parameters outside their admissible ranges at the API boundary.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data failed validation (negative weight, NaN, zero total mass, ...).
class ValidationError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// A mathematical operation was asked for outside its domain: zero-mass cube,
// t outside (0, mu(Q_0)], parameter ordering violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The input does not satisfy the hypothesis of a theorem being verified.
// Carries the first cube (in canonical order) where the hypothesis fails.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, Cube witness, double observed)
      : std::runtime_error(what + " (witness " + witness.to_string() + ")"),
        witness_(std::move(witness)),
        observed_(observed) {}

  const Cube& witness() const noexcept { return witness_; }
  double observed() const noexcept { return observed_; }

 private:
  Cube witness_;
  double observed_;
};

}  // namespace grlab
