#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bosebounds/estimate.hpp"
#include "bosebounds/rational.hpp"
#include "bosebounds/system.hpp"

namespace bosebounds {

/// N^2 (N-1)
BigInt p_coul(int n);
/// N (N-1) (N-2)
BigInt p_newt(int n);

/// Normalizing polynomial of a family: p_newt for the fixed-grain star,
/// p_coul otherwise.
BigInt family_polynomial(Family family, int n);

/// Smallest N the chain inequalities start from: 3 for the fixed-grain star, 2 otherwise.
int chain_base(Family family);

/// R(N) in E(N) >= R(N) E(N-1). Requires N > chain_base(family).
Rational chain_factor(Family family, int n);

/// Product of chain factors from chain_base + 1 to N. Requires N > chain_base.
Rational telescope(Family family, int n);

/// Coefficient c(N) in E(N) >= c(N) E(base); 1 at the base.
Rational corollary_coefficient(Family family, int n);

/// c(N) * seed. The seed must belong to the base N of the family and be
/// negative. Exact or lower seeds give a lower bound; an estimate seed gives
/// an estimate; an upper seed is rejected.
EnergyEstimate corollary_lower_bound(Family family, int n, const EnergyEstimate& seed);

/// E2 N (N-1)^2 / 2 from a negative two-body energy of the intrinsic star.
EnergyEstimate levy_leblond_bound(int n, const EnergyEstimate& e2);

/// -c N^3 (1 + N^(-4/3)) for the Coulomb atom; c > 0 is user supplied.
EnergyEstimate lieb_bound(int n, double c);

/// N >= 1 at which lieb_bound(N, c) equals the Coulomb corollary bound from
/// seed value e2, or empty if the corollary bound stays below it for all N.
std::optional<double> lieb_crossover(double c, double e2);

/// -B N^2 (N-1) for the intrinsic star; B > 0 is user supplied.
EnergyEstimate hall_upper_bound(int n, double b);

struct NormalizedPoint {
  int n = 0;
  double value = 0.0;
  double normalized = 0.0;             ///< value / P(N)
  std::optional<double> per_particle;  ///< value / N for rescaled pair couplings
  BoundKind kind = BoundKind::estimate;
};

/// Divides each estimate by the family polynomial. Estimates must have
/// consecutive N with P(N) != 0.
std::vector<NormalizedPoint> normalized_sequence(Family family, std::span<const EnergyEstimate> estimates,
                                                 bool pair_rescale = false);

}  // namespace bosebounds
