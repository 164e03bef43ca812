// errors.hpp: exception hierarchy shared by all modules.
//
// The CLI maps these onto process exit codes:
//   ValidationError            -> 1
//   NumericError and subclasses -> 2
//   InstabilityError at `point` -> 3

#pragma once

#include <stdexcept>
#include <string>

namespace magnomech {

// Bad input value (negative frequency, non-positive-definite matrix, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Configuration text rejected. Carries a 1-based source location; line 0
// means the problem is not tied to a single line (e.g. a missing key).
class ValidationError : public std::runtime_error {
public:
  ValidationError(const std::string& message, int line = 0, int column = 0);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Steady-state amplitude denominator vanished.
class SingularityError : public NumericError {
public:
  using NumericError::NumericError;
};

class InstabilityError : public NumericError {
public:
  InstabilityError(const std::string& message, double spectral_abscissa)
      : NumericError(message), spectral_abscissa_(spectral_abscissa) {}
  double spectral_abscissa() const noexcept { return spectral_abscissa_; }

private:
  double spectral_abscissa_;
};

class MarginalStabilityError : public InstabilityError {
public:
  using InstabilityError::InstabilityError;
};

// Iterative method ran out of budget.
class ConvergenceError : public NumericError {
public:
  using NumericError::NumericError;
};

// Time integration left the physical region.
class DivergenceError : public NumericError {
public:
  using NumericError::NumericError;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace magnomech
