#include "bosebounds/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bosebounds/errors.hpp"

namespace bosebounds {

void RadialGrid::validate() const {
  if (!(r_max > 0.0)) throw InvalidArgument("grid r_max must be > 0");
  if (n < 8 || n % 2 != 0) throw InvalidArgument("grid point count must be even and >= 8");
}

double RadialOrbital::norm_squared() const {
  std::vector<double> g(u.size());
  std::transform(u.begin(), u.end(), g.begin(), [](double v) { return v * v; });
  return simpson(g, grid.spacing());
}

double simpson(std::span<const double> g, double h) {
  const std::size_t n = g.size() - 1;
  if (g.size() < 3 || n % 2 != 0) throw InvalidArgument("Simpson rule needs an even number of intervals");
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < n; i += 2) odd += g[i];
  for (std::size_t i = 2; i < n; i += 2) even += g[i];
  return h / 3.0 * (g[0] + g[n] + 4.0 * odd + 2.0 * even);
}

std::vector<double> cumulative_integral(std::span<const double> g, double h) {
  const std::size_t n = g.size() - 1;
  if (g.size() < 4) throw InvalidArgument("cumulative integral needs at least four points");
  std::vector<double> out(g.size(), 0.0);
  const double c = h / 24.0;
  for (std::size_t j = 0; j < n; ++j) {
    double piece;
    if (j == 0)
      piece = c * (9.0 * g[0] + 19.0 * g[1] - 5.0 * g[2] + g[3]);
    else if (j == n - 1)
      piece = c * (9.0 * g[n] + 19.0 * g[n - 1] - 5.0 * g[n - 2] + g[n - 3]);
    else
      piece = c * (-g[j - 1] + 13.0 * g[j] + 13.0 * g[j + 1] - g[j + 2]);
    out[j + 1] = out[j] + piece;
  }
  return out;
}

std::vector<double> derivative(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 5) throw InvalidArgument("derivative needs at least five points");
  std::vector<double> d(n);
  const double c = 1.0 / (12.0 * h);
  d[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
  d[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
  for (std::size_t i = 2; i + 2 < n; ++i) d[i] = c * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
  d[n - 2] = c * (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]);
  d[n - 1] = c * (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]);
  return d;
}

int sturm_count(std::span<const double> diag, double off, double x) {
  const double off2 = off * off;
  const double tiny = std::numeric_limits<double>::min();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    q = diag[i] - x - (i > 0 ? off2 / q : 0.0);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

TridiagonalEigenpair lowest_tridiagonal_eigenpair(std::span<const double> diag, double off) {
  const std::size_t n = diag.size();
  if (n == 0) throw InvalidArgument("empty tridiagonal matrix");
  // Gershgorin bracket
  double lo = std::numeric_limits<double>::max(), hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(off) : 0.0) + (i + 1 < n ? std::abs(off) : 0.0);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(std::abs(lo), std::abs(hi));
  while (hi - lo > 4.0 * eps * scale) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(diag, off, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  const double value = 0.5 * (lo + hi);

  // Inverse iteration with a shift just below the eigenvalue; (T - sigma) is
  // then positive definite and the Thomas algorithm needs no pivoting.
  const double sigma = value - 64.0 * eps * scale;
  std::vector<double> x(n, 1.0), cprime(n), dprime(n);
  for (int iter = 0; iter < 3; ++iter) {
    double denom = diag[0] - sigma;
    cprime[0] = off / denom;
    dprime[0] = x[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = diag[i] - sigma - off * cprime[i - 1];
      cprime[i] = off / denom;
      dprime[i] = (x[i] - off * dprime[i - 1]) / denom;
    }
    x[n - 1] = dprime[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = dprime[i] - cprime[i] * x[i + 1];
    double norm = 0.0, sum = 0.0;
    for (double v : x) {
      norm += v * v;
      sum += v;
    }
    norm = std::sqrt(norm);
    const double sign = sum < 0.0 ? -1.0 : 1.0;
    for (double& v : x) v *= sign / norm;
  }
  return {value, std::move(x)};
}

}  // namespace bosebounds
