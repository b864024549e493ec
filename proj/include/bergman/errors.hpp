#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/// Base class for runtime numerical failures (as opposed to invalid input,
/// which throws std::domain_error / std::invalid_argument).
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Newton iteration (or a linear solve) failed to reach its tolerance.
class NoConvergenceError : public NumericError {
  public:
    using NumericError::NumericError;
};

/// |phi'| fell below the safe threshold at an iterate.
class DerivativeVanishedError : public NumericError {
  public:
    using NumericError::NumericError;
};

/// Gram matrix condition estimate exceeded the configured cap.
class IllConditionedError : public NumericError {
  public:
    using NumericError::NumericError;
};

/// zbar norm^2 minus projection norm^2 came out more negative than the
/// clamping band allows.
class NegativeDiscriminantError : public NumericError {
  public:
    using NumericError::NumericError;
};

/// Grid mask for the torsion solver contained no interior nodes.
class EmptyMaskError : public NumericError {
  public:
    using NumericError::NumericError;
};

/// Input validation failure carrying a stable machine-readable code
/// (used by the CLI to report errors and choose the exit status).
class ValidationError : public std::runtime_error {
  public:
    ValidationError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

}  // namespace bergman
