#pragma once

#include <stdexcept>
#include <string>

namespace bosebounds {

/// Thrown when a system, problem or configuration violates its preconditions.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A phase-space point where a Coulomb/Newton term is infinite.
class SingularConfiguration : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Overlap matrix too close to singular for a stable Cholesky reduction.
class ConditioningError : public std::runtime_error {
public:
  ConditioningError(const std::string& what, std::size_t basis_size, double condition)
      : std::runtime_error(what), basis_size_(basis_size), condition_(condition) {}

  std::size_t basis_size() const noexcept { return basis_size_; }
  double condition() const noexcept { return condition_; }

private:
  std::size_t basis_size_;
  double condition_;
};

/// An iterative solver ran out of iterations.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace bosebounds
