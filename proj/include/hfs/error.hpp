#pragma once

#include <stdexcept>
#include <string>

namespace hfs {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. Re(x) <= 0 for E1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration such as a quadrature order outside its supported range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input that fails a structural precondition (non-Hermitian matrix, malformed file).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Requested index is beyond what binary64 can deliver for this route.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// An iterative method ran out of budget. Carries the best estimate reached.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace hfs
