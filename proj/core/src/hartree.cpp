#include "bosebounds/hartree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bosebounds/errors.hpp"

namespace bosebounds {

void HartreeFunctionalCoeffs::validate() const {
  if (!(kinetic > 0.0)) throw InvalidArgument("kinetic coefficient must be > 0");
  if (!std::isfinite(central) || !std::isfinite(pair)) throw InvalidArgument("coefficients must be finite");
}

HartreeFunctionalCoeffs functional_coeffs(const SystemSpec& spec) {
  spec.validate();
  const double n = spec.n;
  HartreeFunctionalCoeffs c;
  switch (spec.family) {
    case Family::coulomb_atom:
      c = {0.5 * n, -n * n, 0.5 * n * (n - 1.0)};
      break;
    case Family::newton_fixed_grain:
      c = {0.5 * n, -n, -0.5 * spec.beta * n * (n - 1.0)};
      break;
    case Family::newton_intrinsic:
      c = {0.5 * (n - 1.0), 0.0, -0.5 * n * (n - 1.0)};
      break;
  }
  if (spec.pair_rescale && spec.n > 1) c.pair /= (n - 1.0);
  return c;
}

HartreeFunctionalCoeffs coulomb_limit_coeffs() { return {0.5, -1.0, 0.5}; }
HartreeFunctionalCoeffs newton_limit_coeffs() { return {0.5, 0.0, -0.5}; }

namespace {

std::vector<double> squared(std::span<const double> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](double x) { return x * x; });
  return out;
}

}  // namespace

FormValues evaluate_forms(const RadialOrbital& phi) {
  phi.grid.validate();
  const auto& u = phi.u;
  if (u.size() != static_cast<std::size_t>(phi.grid.n) + 1) throw InvalidArgument("orbital does not match its grid");
  const double h = phi.grid.spacing();
  const double norm = phi.norm_squared();
  if (std::abs(norm - 1.0) > 1e-8) {
    std::ostringstream msg;
    msg << "orbital is not normalized (norm^2 = " << norm << ")";
    throw InvalidArgument(msg.str());
  }

  FormValues f;
  f.kinetic = simpson(squared(derivative(u, h)), h);

  const auto rho = squared(u);
  std::vector<double> rho_over_r(u.size(), 0.0);  // u^2/r -> 0 at the origin
  for (std::size_t i = 1; i < u.size(); ++i) rho_over_r[i] = rho[i] / phi.grid.r(static_cast<int>(i));
  f.central = simpson(rho_over_r, h);

  // i = 2 int (u^2/r) Q(r) dr with Q(r) = int_0^r u^2
  const auto q = cumulative_integral(rho, h);
  std::vector<double> g(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) g[i] = rho_over_r[i] * q[i];
  f.pair = 2.0 * simpson(g, h);
  return f;
}

double functional_value(const HartreeFunctionalCoeffs& c, const FormValues& f) {
  return c.kinetic * f.kinetic + c.central * f.central + c.pair * f.pair;
}

double dilation_derivative(const HartreeFunctionalCoeffs& c, const FormValues& f) {
  return 2.0 * c.kinetic * f.kinetic + c.central * f.central + c.pair * f.pair;
}

RadialOrbital rescale(const RadialOrbital& phi, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("dilation factor must be > 0");
  RadialOrbital out;
  out.grid = {phi.grid.r_max / lambda, phi.grid.n};
  out.u.resize(phi.u.size());
  const double factor = std::sqrt(lambda);
  std::transform(phi.u.begin(), phi.u.end(), out.u.begin(), [&](double v) { return factor * v; });
  return out;
}

RadialOrbital hydrogenic_orbital(const RadialGrid& grid, double a) {
  grid.validate();
  RadialOrbital phi{grid, std::vector<double>(static_cast<std::size_t>(grid.n) + 1)};
  const double c = 2.0 * std::pow(a, 1.5);
  for (int i = 0; i <= grid.n; ++i) phi.u[i] = c * grid.r(i) * std::exp(-a * grid.r(i));
  phi.u[grid.n] = 0.0;
  return phi;
}

namespace {

// Grid functional whose stationarity condition is the tridiagonal mean-field
// problem solved in scf_solve. Works on interior points 1..n-1.
class GridFunctional {
public:
  GridFunctional(const HartreeFunctionalCoeffs& c, const RadialGrid& grid)
      : c_(c), h_(grid.spacing()), r_(static_cast<std::size_t>(grid.n) + 1) {
    for (int i = 0; i <= grid.n; ++i) r_[i] = grid.r(i);
  }

  // V_i = sum_j h u_j^2 / max(r_i, r_j)
  std::vector<double> mean_field(std::span<const double> u) const {
    const std::size_t n = u.size() - 1;
    std::vector<double> v(u.size(), 0.0);
    double outer = 0.0;
    for (std::size_t j = n; j-- > 1;) {
      v[j] = outer;
      outer += h_ * u[j] * u[j] / r_[j];
    }
    double inner = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      inner += h_ * u[i] * u[i];
      v[i] += inner / r_[i];
    }
    return v;
  }

  double energy(std::span<const double> u) const {
    const std::size_t n = u.size() - 1;
    double kin = 0.0, cen = 0.0;
    for (std::size_t i = 0; i < n; ++i) kin += (u[i + 1] - u[i]) * (u[i + 1] - u[i]);
    for (std::size_t i = 1; i < n; ++i) cen += u[i] * u[i] / r_[i];
    double pair = 0.0;
    if (c_.pair != 0.0) {
      const auto v = mean_field(u);
      for (std::size_t i = 1; i < n; ++i) pair += u[i] * u[i] * v[i];
    }
    return c_.kinetic * kin / h_ + c_.central * h_ * cen + c_.pair * h_ * pair;
  }

  void normalize(std::vector<double>& u) const {
    double s = 0.0;
    for (double v : u) s += v * v;
    const double f = 1.0 / std::sqrt(h_ * s);
    for (double& v : u) v *= f;
  }

  // lowest eigenvector of the mean-field operator built from u, grid-normalized
  std::vector<double> eigenfunction(std::span<const double> u) const {
    const std::size_t n = u.size() - 1;
    std::vector<double> diag(n - 1);
    const auto v = c_.pair != 0.0 ? mean_field(u) : std::vector<double>(u.size(), 0.0);
    for (std::size_t i = 1; i < n; ++i)
      diag[i - 1] = 2.0 * c_.kinetic / (h_ * h_) + c_.central / r_[i] + 2.0 * c_.pair * v[i];
    const auto pair = lowest_tridiagonal_eigenpair(diag, -c_.kinetic / (h_ * h_));
    std::vector<double> out(u.size(), 0.0);
    std::copy(pair.vector.begin(), pair.vector.end(), out.begin() + 1);
    normalize(out);
    return out;
  }

private:
  HartreeFunctionalCoeffs c_;
  double h_;
  std::vector<double> r_;
};

}  // namespace

ScfResult scf_solve(const HartreeFunctionalCoeffs& coeffs, const ScfOptions& options) {
  coeffs.validate();
  options.grid.validate();
  if (!(options.mixing > 0.0 && options.mixing <= 1.0)) throw InvalidArgument("mixing must be in (0, 1]");
  if (!(options.tolerance > 0.0)) throw InvalidArgument("tolerance must be > 0");
  if (coeffs.central >= 0.0 && coeffs.pair >= 0.0)
    throw InvalidArgument("functional has no attractive term and no minimizer");

  // phi = rescale(phi_hat, lambda0) turns the functional into
  // 2 lambda0^2 c_K (k/2 + c_C/(2 lambda0 c_K) c + c_I/(2 lambda0 c_K) i).
  const double lambda0 = (std::abs(coeffs.central) + std::abs(coeffs.pair)) / (2.0 * coeffs.kinetic);
  const double energy_scale = 2.0 * lambda0 * lambda0 * coeffs.kinetic;
  const HartreeFunctionalCoeffs scaled{0.5, coeffs.central / (2.0 * lambda0 * coeffs.kinetic),
                                       coeffs.pair / (2.0 * lambda0 * coeffs.kinetic)};

  const GridFunctional functional(scaled, options.grid);
  std::vector<double> u = hydrogenic_orbital(options.grid, 1.0).u;
  functional.normalize(u);
  double energy = functional.energy(u);

  ScfResult result;
  result.energy_trace.push_back(energy * energy_scale);
  bool converged = false;
  int iter = 0;
  std::vector<double> trial(u.size());
  for (; iter < options.max_iterations && !converged; ++iter) {
    const auto v = functional.eigenfunction(u);
    double eta = options.mixing;
    bool accepted = false;
    double trial_energy = energy;
    while (eta >= 1e-10) {
      for (std::size_t i = 0; i < u.size(); ++i) trial[i] = (1.0 - eta) * u[i] + eta * v[i];
      functional.normalize(trial);
      trial_energy = functional.energy(trial);
      if (trial_energy <= energy + 1e-15 * std::abs(energy)) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) {  // no descent left at working precision
      converged = true;
      break;
    }
    const double change = energy - trial_energy;
    u.swap(trial);
    energy = trial_energy;
    result.energy_trace.push_back(energy * energy_scale);
    if (eta == options.mixing && change < options.tolerance * std::abs(energy)) converged = true;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "SCF did not converge in " << options.max_iterations << " iterations; last energies:";
    const auto& t = result.energy_trace;
    for (std::size_t i = t.size() > 5 ? t.size() - 5 : 0; i < t.size(); ++i) msg << ' ' << t[i];
    throw ConvergenceError(msg.str());
  }

  RadialOrbital scaled_orbital{options.grid, std::move(u)};
  const double norm = scaled_orbital.norm_squared();
  for (double& x : scaled_orbital.u) x /= std::sqrt(norm);
  result.orbital = rescale(scaled_orbital, lambda0);
  result.forms = evaluate_forms(result.orbital);
  result.energy = functional_value(coeffs, result.forms);
  result.virial_residual = std::abs(dilation_derivative(coeffs, result.forms)) / std::abs(result.energy);
  result.iterations = iter;
  return result;
}

EnergyEstimate hartree_upper_bound(const SystemSpec& spec, const RadialOrbital& phi) {
  const auto coeffs = functional_coeffs(spec);
  const double value = functional_value(coeffs, evaluate_forms(phi));
  return {value, BoundKind::upper, "hartree", spec.family, spec.n};
}

}  // namespace bosebounds
