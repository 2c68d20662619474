#pragma once

#include <vector>

#include "bosebounds/estimate.hpp"
#include "bosebounds/radial.hpp"
#include "bosebounds/system.hpp"

namespace bosebounds {

/// One-orbital functional  c_K k(phi) + c_C c(phi) + c_I i(phi)  with
///   k = int |grad phi|^2,  c = int |phi|^2 / |q|,
///   i = int int |phi(x)|^2 |phi(y)|^2 / |x - y|.
struct HartreeFunctionalCoeffs {
  double kinetic = 0.5;
  double central = 0.0;
  double pair = 0.0;

  void validate() const;
};

/// Product-state functional of the N-body system in its dimensionless units:
///   atom:          (N/2, -N^2, N(N-1)/2)
///   fixed grain:   (N/2, -N, -beta N(N-1)/2)
///   intrinsic:     ((N-1)/2, 0, -N(N-1)/2), the center-of-mass kinetic energy
///                  k/2 of the product state removed.
/// With pair_rescale the pair coefficient is divided by N-1.
HartreeFunctionalCoeffs functional_coeffs(const SystemSpec& spec);

/// N -> infinity functionals after the dilation phi -> N^{3/2} phi(N q).
HartreeFunctionalCoeffs coulomb_limit_coeffs();  // (1/2, -1, 1/2)
HartreeFunctionalCoeffs newton_limit_coeffs();   // (1/2, 0, -1/2)

struct FormValues {
  double kinetic = 0.0;
  double central = 0.0;
  double pair = 0.0;
};

/// Forms of a normalized orbital by fourth-order radial quadrature; the pair
/// kernel is reduced to 1/max(r, r'). Throws on an unnormalized orbital.
FormValues evaluate_forms(const RadialOrbital& phi);

double functional_value(const HartreeFunctionalCoeffs& coeffs, const FormValues& forms);

/// d/d lambda of the functional along phi_lambda = lambda^{3/2} phi(lambda q) at lambda = 1.
double dilation_derivative(const HartreeFunctionalCoeffs& coeffs, const FormValues& forms);

/// phi_lambda(q) = lambda^{3/2} phi(lambda q), stored on the grid scaled by 1/lambda.
RadialOrbital rescale(const RadialOrbital& phi, double lambda);

/// u(r) = 2 a^{3/2} r exp(-a r), the normalized hydrogenic 1s orbital.
RadialOrbital hydrogenic_orbital(const RadialGrid& grid, double a = 1.0);

struct ScfOptions {
  RadialGrid grid;              ///< grid in the internally rescaled units
  double mixing = 0.3;
  double tolerance = 1e-12;     ///< relative energy change between accepted full-mixing steps
  int max_iterations = 2000;
};

struct ScfResult {
  double energy = 0.0;  ///< functional value at the orbital, from evaluate_forms
  RadialOrbital orbital;
  FormValues forms;
  double virial_residual = 0.0;   ///< |dilation derivative| / |energy|
  int iterations = 0;
  std::vector<double> energy_trace;  ///< grid functional along the iterations
};

/// Minimizes the functional over spherical orbitals by a damped fixed-point
/// iteration on the lowest eigenfunction of the mean-field operator.
///
/// The problem is first dilated so that its coefficients are O(1); the grid
/// in `options` refers to that frame and the returned orbital lives on the
/// grid scaled back by the dilation factor. Each step mixes the old orbital
/// with the new eigenfunction and halves the mixing until the grid functional
/// does not increase. Throws ConvergenceError with the energy trace when
/// max_iterations is exhausted.
ScfResult scf_solve(const HartreeFunctionalCoeffs& coeffs, const ScfOptions& options = {});

/// Functional value of `phi` for the system; a Rayleigh-Ritz upper bound.
EnergyEstimate hartree_upper_bound(const SystemSpec& spec, const RadialOrbital& phi);

}  // namespace bosebounds
