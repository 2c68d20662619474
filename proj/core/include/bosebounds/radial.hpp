#pragma once

#include <span>
#include <vector>

namespace bosebounds {

/// Uniform grid r_i = i h, i = 0..n, h = r_max / n (n even).
struct RadialGrid {
  double r_max = 60.0;
  int n = 6000;

  double spacing() const { return r_max / n; }
  double r(int i) const { return i * spacing(); }
  void validate() const;
};

/// Spherically symmetric orbital stored as u(r) = sqrt(4 pi) r phi(r) on the
/// grid points 0..n, so that ||phi||_2 = 1 is the statement int u^2 dr = 1.
/// u(0) = u(r_max) = 0.
struct RadialOrbital {
  RadialGrid grid;
  std::vector<double> u;

  double norm_squared() const;
};

/// Composite Simpson rule over the whole grid.
double simpson(std::span<const double> g, double h);

/// Cumulative integral F_i = int_0^{r_i} g dr, fourth order.
std::vector<double> cumulative_integral(std::span<const double> g, double h);

/// First derivative, fourth-order central differences with one-sided ends.
std::vector<double> derivative(std::span<const double> f, double h);

/// Lowest eigenpair of the symmetric tridiagonal matrix with diagonal `diag`
/// and constant off-diagonal `off`: Sturm-sequence bisection for the value,
/// inverse iteration for the vector (unit Euclidean norm, positive sum).
struct TridiagonalEigenpair {
  double value;
  std::vector<double> vector;
};

TridiagonalEigenpair lowest_tridiagonal_eigenpair(std::span<const double> diag, double off);

/// Number of eigenvalues strictly below x.
int sturm_count(std::span<const double> diag, double off, double x);

}  // namespace bosebounds
