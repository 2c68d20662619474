#include "bosebounds/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "bosebounds/errors.hpp"

namespace bosebounds {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights are
// mu0 times the squared first components of the eigenvectors.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw ConvergenceError("Golub-Welsch eigenvalue solve failed");
  const auto n = diag.size();
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("quadrature order must be >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) off(i - 1) = i / std::sqrt(4.0 * i * i - 1.0);
  QuadratureRule rule = golub_welsch(diag, off, 2.0);
  // symmetrize to remove eigen-solver noise
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_laguerre(int n, double a) {
  if (n < 1) throw InvalidArgument("quadrature order must be >= 1");
  if (!(a > -1.0)) throw InvalidArgument("Laguerre exponent must be > -1");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0 + a;
  for (int i = 1; i < n; ++i) off(i - 1) = std::sqrt(i * (i + a));
  return golub_welsch(diag, off, std::tgamma(a + 1.0));
}

std::vector<SimplexNode> simplex_quadrature(int order_s, int order_inner, double alpha) {
  if (order_s < 2 || order_inner < 2) throw InvalidArgument("simplex quadrature orders must be >= 2");
  if (!(alpha > 0.0)) throw InvalidArgument("exponent alpha must be > 0");

  const QuadratureRule radial = gauss_laguerre(order_s);
  const QuadratureRule inner = gauss_legendre(order_inner);

  std::vector<SimplexNode> nodes;
  nodes.reserve(radial.size() * inner.size() * inner.size());
  const double scale = 1.0 / (2.0 * alpha);
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const double s = radial.nodes[i] * scale;
    const double ws = radial.weights[i] * scale;
    for (std::size_t j = 0; j < inner.size(); ++j) {
      const double x = 0.5 * (inner.nodes[j] + 1.0);  // [0, 1]
      const double wx = 0.5 * inner.weights[j];
      for (std::size_t k = 0; k < inner.size(); ++k) {
        const double y = inner.nodes[k];  // [-1, 1]
        const double wy = inner.weights[k];
        const double r12 = s * x;
        const double t = r12 * y;
        const double r1 = 0.5 * (s + t);
        const double r2 = 0.5 * (s - t);
        // dr1 dr2 dr12 = s^2 x / 2 ds dx dy, times r1 r2 r12
        const double measure = 0.5 * s * s * x * r1 * r2 * r12;
        nodes.push_back({r1, r2, r12, ws * wx * wy * measure});
      }
    }
  }
  return nodes;
}

}  // namespace bosebounds
