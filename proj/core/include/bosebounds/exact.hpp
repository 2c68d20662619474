#pragma once

#include "bosebounds/system.hpp"

namespace bosebounds {

/// One body with kinetic |p|^2/(2 mu) in the potential -gamma/|q| (hbar = 1).
struct HydrogenicProblem {
  double effective_mass = 1.0;
  double attraction = 1.0;

  void validate() const;
};

/// Ground-state energy -mu gamma^2 / 2.
double hydrogenic_energy(const HydrogenicProblem& pb);

/// Relative-coordinate problem of the two-body intrinsic star in its own units:
/// reduced mass 1/2, unit attraction.
HydrogenicProblem reduce_two_body_intrinsic();

/// Ground-state energy of the two-body intrinsic star (exact, dimensionless).
double intrinsic_two_body_energy();

/// One-body ground state of the fixed-grain star, -1/2 in its own units.
double fixed_grain_one_body_energy();

/// Two-body fixed-grain system with the grain mass halved and G doubled,
/// expressed in the units of the original system with mass ratio `beta`.
/// Its reduction has central coefficient 1 and pair coefficient -2 beta.
SystemSpec two_newt_seed(double beta);

}  // namespace bosebounds
