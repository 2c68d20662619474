#pragma once

#include <Eigen/Core>

namespace bosebounds {

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;   ///< normalized so that c^T S c = 1
  double residual = 0.0;    ///< ||H c - E S c|| / ||H c||
  double condition = 0.0;   ///< condition number of the unit-diagonal S
};

/// Largest accepted condition number of the Jacobi-scaled overlap matrix.
inline constexpr double kMaxOverlapCondition = 1e11;

/// Smallest eigenpair of H c = E S c for symmetric H and symmetric positive
/// definite S. The problem is scaled to a unit-diagonal S, then reduced by
/// Cholesky. Throws ConditioningError when S is numerically singular (condition
/// above kMaxOverlapCondition or a failed factorization).
Eigenpair smallest_generalized_eigenpair(const Eigen::MatrixXd& h, const Eigen::MatrixXd& s);

}  // namespace bosebounds
