#pragma once

#include <stdexcept>
#include <string>

namespace ara {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A distribution or model parameter outside its domain. `field()` names it.
class ParameterDomainError : public Error {
 public:
  ParameterDomainError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A hyper-parameter draw produced an invalid concrete distribution.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// Bad call arguments (e.g. successes > trials).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A problem definition that cannot be solved as posed.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// A sampler or utility produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Constraints removed every decision.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace ara
