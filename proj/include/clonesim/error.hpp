#pragma once

#include <stdexcept>
#include <string>

namespace clonesim {

/// A parameter lies outside the range an operation accepts.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested parameters hit a pole of a closed-form expression.
class SingularityError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Inputs to a combining network were not equal copies; carries the energy
/// left behind in the ancilla ports.
class CombineError : public std::runtime_error {
 public:
  CombineError(const std::string& what, double residual_energy)
      : std::runtime_error(what), residual_energy_(residual_energy) {}

  double residual_energy() const noexcept { return residual_energy_; }

 private:
  double residual_energy_;
};

}  // namespace clonesim
