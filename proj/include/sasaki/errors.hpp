#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sasaki {

/// Base class for every failure raised by the library. CLI front ends map
/// `ValidationError` subclasses to exit code 2 and `SolverError` to 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

/// The transverse density f0'' + D^2 phi is not positive at `index`.
class PositivityViolation : public ValidationError {
 public:
  explicit PositivityViolation(std::size_t index)
      : ValidationError("positivity violated at node " + std::to_string(index)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class GridMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonConvexInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The supremum of a Legendre transform sits on the truncation boundary.
class TruncationWarning : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DegenerateTriangle : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotDecreasing : public ValidationError {
 public:
  NotDecreasing(std::size_t level, std::size_t index)
      : ValidationError("sequence not decreasing at level " + std::to_string(level) + ", node " +
                        std::to_string(index)),
        level_(level),
        index_(index) {}
  std::size_t level() const noexcept { return level_; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t level_;
  std::size_t index_;
};

class NewtonDivergence : public SolverError {
 public:
  NewtonDivergence(double eps, double residual)
      : SolverError("Newton iteration did not converge at eps=" + std::to_string(eps) +
                    " (residual " + std::to_string(residual) + ")"),
        eps_(eps) {}
  double eps() const noexcept { return eps_; }

 private:
  double eps_;
};

class PositivityLoss : public SolverError {
 public:
  explicit PositivityLoss(double eps)
      : SolverError("no admissible Newton step length at eps=" + std::to_string(eps)), eps_(eps) {}
  double eps() const noexcept { return eps_; }

 private:
  double eps_;
};

}  // namespace sasaki
