#pragma once

#include <stdexcept>
#include <string>

namespace xop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (poles, parameter
/// restrictions, negative degrees, missing moments, complex roots, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested degree is not part of the family's polynomial sequence.
class InadmissibleDegree : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, double condition_estimate)
      : Error(what), condition_estimate_(condition_estimate) {}

  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

/// A rational expression expected to reduce to a polynomial left a remainder.
class NonPolynomialError : public Error {
 public:
  NonPolynomialError(const std::string& what, double relative_remainder)
      : Error(what), relative_remainder_(relative_remainder) {}

  double relative_remainder() const noexcept { return relative_remainder_; }

 private:
  double relative_remainder_;
};

/// Moment recursion hit a vanishing leading coefficient or overflowed.
class RecursionBreakdown : public Error {
 public:
  using Error::Error;
};

}  // namespace xop
