#include "bosebounds/generalized_eigen.hpp"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "bosebounds/errors.hpp"

namespace bosebounds {

namespace {

bool is_symmetric(const Eigen::MatrixXd& m) {
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale;
}

}  // namespace

Eigenpair smallest_generalized_eigenpair(const Eigen::MatrixXd& h, const Eigen::MatrixXd& s) {
  const auto n = h.rows();
  if (n == 0 || h.cols() != n || s.rows() != n || s.cols() != n)
    throw InvalidArgument("H and S must be square matrices of equal size");
  if (!is_symmetric(h) || !is_symmetric(s)) throw InvalidArgument("H and S must be symmetric");

  const std::size_t size = static_cast<std::size_t>(n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (!(s(i, i) > 0.0))
      throw ConditioningError("overlap matrix has a non-positive diagonal (basis size " +
                                  std::to_string(size) + ")",
                              size, INFINITY);

  const Eigen::VectorXd d = s.diagonal().cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd ss = d.asDiagonal() * s * d.asDiagonal();
  const Eigen::MatrixXd hs = d.asDiagonal() * h * d.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> overlap(ss, Eigen::EigenvaluesOnly);
  const double lo = overlap.eigenvalues().minCoeff();
  const double hi = overlap.eigenvalues().maxCoeff();
  const double condition = lo > 0.0 ? hi / lo : INFINITY;
  if (!(condition <= kMaxOverlapCondition))
    throw ConditioningError("overlap matrix is numerically singular (basis size " +
                                std::to_string(size) + ", condition " + std::to_string(condition) + ")",
                            size, condition);

  Eigen::LLT<Eigen::MatrixXd> llt(ss);
  if (llt.info() != Eigen::Success)
    throw ConditioningError("Cholesky factorization of the overlap failed (basis size " +
                                std::to_string(size) + ")",
                            size, condition);

  // L^-1 H L^-T
  Eigen::MatrixXd reduced = llt.matrixL().solve(hs);
  reduced = llt.matrixL().solve(reduced.transpose()).transpose();
  reduced = 0.5 * (reduced + reduced.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> standard(reduced);
  if (standard.info() != Eigen::Success) throw ConvergenceError("symmetric eigen solve failed");

  Eigen::VectorXd y = standard.eigenvectors().col(0);
  Eigen::VectorXd c = llt.matrixU().solve(y);
  c = d.asDiagonal() * c;

  Eigenpair out;
  out.condition = condition;
  // Rayleigh quotient on the back-transformed vector
  const double norm = c.dot(s * c);
  c /= std::sqrt(norm);
  Eigen::Index pivot = 0;
  c.cwiseAbs().maxCoeff(&pivot);
  if (c(pivot) < 0.0) c = -c;

  const Eigen::VectorXd hc = h * c;
  out.value = c.dot(hc);
  out.vector = c;
  const double hnorm = hc.norm();
  out.residual = (hc - out.value * (s * c)).norm() / (hnorm > 0.0 ? hnorm : 1.0);
  return out;
}

}  // namespace bosebounds
