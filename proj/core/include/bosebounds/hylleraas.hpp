#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "bosebounds/exact.hpp"

namespace bosebounds {

struct HylleraasIndex {
  int l;  ///< power of s = r1 + r2
  int m;  ///< half power of t = r1 - r2
  int n;  ///< power of u = r12
};

/// Correlated two-particle basis
///   chi_{lmn} = exp(-alpha s) s^l t^(2m) u^n,  l + 2m + n <= omega.
/// Only even powers of t appear, so every function is symmetric under
/// particle exchange. Basis(omega) is a prefix of basis(omega + 1).
struct HylleraasBasis {
  double alpha = 1.0;
  int omega = 0;

  std::vector<HylleraasIndex> indices() const;
  std::size_t size() const { return indices().size(); }
};

/// Two particles around a fixed center:
///   kinetic (|p1|^2 + |p2|^2) - Z (1/r1 + 1/r2) + lambda / r12.
struct TwoBodyProblem {
  double central_strength = 1.0;  ///< Z > 0
  double pair_coeff = 0.0;        ///< lambda, positive repels
  double kinetic_coeff = 0.5;     ///< hbar^2 / 2m per particle
};

struct HylleraasMatrices {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd potential;

  Eigen::MatrixXd hamiltonian() const { return kinetic + potential; }
};

struct QuadratureOrders {
  int radial = 0;  ///< 0 selects omega + 6
  int inner = 0;

  QuadratureOrders resolved(int omega) const;
};

/// Matrix elements by simplex quadrature; the kinetic form is the symmetric
/// first-derivative form in (r1, r2, r12). The power s^l is represented by the
/// generalized Laguerre polynomial L_l^(5 + 4m + 2n)(2 alpha s), a triangular
/// change of basis that spans the same space and keeps S far better conditioned.
HylleraasMatrices assemble(const HylleraasBasis& basis, const TwoBodyProblem& problem,
                           QuadratureOrders orders = {});

struct HylleraasSolution {
  HylleraasBasis basis;
  Eigen::VectorXd coeffs;  ///< in the representation of assemble(), with c^T S c = 1
  double energy = 0.0;
  double kinetic = 0.0;
  double potential = 0.0;
  double virial_residual = 0.0;  ///< |2T + V| / |E|
  double eigen_residual = 0.0;
  double condition = 0.0;  ///< condition number of the Cholesky factor of S
  QuadratureOrders quadrature;
};

struct AlphaSearch {
  double lower_factor = 0.5;  ///< bracket [lower_factor Z', upper_factor Z'], Z' = Z + 5/16 max(0, -lambda)
  double upper_factor = 2.5;
  double tolerance = 1e-4;
};

struct TwoBodyOptions {
  int omega = 0;
  std::optional<double> alpha;  ///< fixed exponent; empty selects the search
  AlphaSearch search;
  QuadratureOrders quadrature;
};

/// Rayleigh-Ritz ground state in the Hylleraas basis; the energy is an upper
/// bound to the exact two-body ground-state energy.
HylleraasSolution solve_two_body(const TwoBodyProblem& problem, const TwoBodyOptions& options);

/// Largest omega <= requested whose overlap passes the conditioning check at the
/// given alpha, or -1.
int largest_usable_omega(const TwoBodyProblem& problem, double alpha, int requested);

/// Variational solution of a one-body hydrogenic problem (e.g. the relative
/// coordinate of a two-body system) in the basis exp(-alpha r) r^k, k <= omega.
struct RelativeSolution {
  double alpha = 0.0;
  int omega = 0;
  Eigen::VectorXd coeffs;
  double energy = 0.0;
  double virial_residual = 0.0;
};

RelativeSolution solve_relative_problem(const HydrogenicProblem& pb, int omega,
                                        std::optional<double> alpha = std::nullopt,
                                        double tolerance = 1e-4);

/// Golden-section minimization of a unimodal function on [lo, hi].
template <class F>
double golden_section_minimize(F&& f, double lo, double hi, double tolerance) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

}  // namespace bosebounds
