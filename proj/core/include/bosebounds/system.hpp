#pragma once

#include <array>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace bosebounds {

/// The three Hamiltonian families.
enum class Family {
  coulomb_atom,        ///< N bosonic charges around a fixed nucleus of charge N z e
  newton_fixed_grain,  ///< N gravitating bosons around a fixed grain of mass M
  newton_intrinsic,    ///< translation-invariant star with the center of mass removed
};

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);

/// Physical description of an N-boson system.
///
/// `z` is only read for the Coulomb atom, `beta` (= m/M) and `gravity_scale`
/// (multiplier on G) only for the fixed-grain star. `pair_rescale` puts a factor
/// 1/(N-1) in front of the pair interaction.
struct SystemSpec {
  Family family = Family::coulomb_atom;
  int n = 1;
  int z = 1;
  double beta = 1.0;
  double gravity_scale = 1.0;
  bool pair_rescale = false;

  void validate() const;
};

/// Dimensionless coefficients of a system Hamiltonian.
///
/// For the atom and the fixed-grain star the Hamiltonian is
///   sum_k kinetic |p_k|^2 - central sum_k 1/|q_k| + pair sum_{k<l} 1/|q_k - q_l|,
/// for the intrinsic star it is
///   sum_{k<l} ( kinetic |p_k - p_l|^2 - |pair| / |q_k - q_l| ).
/// `pair_coeff` is signed: positive repels, negative attracts.
///
/// Units (hbar = m = 1): the atom measures lengths in hbar^2/(m z^2 e^2) and
/// energies in m z^4 e^4/hbar^2, the fixed-grain star in hbar^2/(G M m^2) and
/// G^2 M^2 m^3/hbar^2, the intrinsic star in hbar^2/(G m^3) and G^2 m^5/hbar^2.
/// `energy_unit` and `length_unit` express those units relative to the
/// e = 1 (atom) or G = 1, m = 1 (stars) base system.
struct ReducedSystem {
  Family family = Family::coulomb_atom;
  int n = 1;
  double kinetic_coeff = 0.5;
  double central_coeff = 0.0;
  double pair_coeff = 0.0;
  double energy_unit = 1.0;
  double length_unit = 1.0;

  double to_physical_energy(double dimensionless) const { return dimensionless * energy_unit; }
};

ReducedSystem reduce(const SystemSpec& spec);

using Vec3 = std::array<double, 3>;

/// Classical N-body phase point.
struct PhasePoint {
  std::vector<Vec3> momenta;
  std::vector<Vec3> positions;

  std::size_t size() const { return positions.size(); }
};

/// Value of the classical Hamiltonian at `x`.
/// Throws SingularConfiguration for coincident particles, or a particle at
/// the attracting center when a central term is present.
double classical_energy(const ReducedSystem& sys, const PhasePoint& x);

struct PairTerm {
  int k = 0;  // 0-based, k < l
  int l = 0;
  double value = 0.0;
};

/// Pair decomposition H = sum_{k<l} U_{k,l}; single-particle terms are shared
/// among the N-1 pairs a particle belongs to. For the intrinsic star the
/// summands W_{k,l} of its pair form are returned. Ordered lexicographically.
std::vector<PairTerm> pair_terms(const ReducedSystem& sys, const PhasePoint& x);

/// Sampling policy for phase points used by the identity suite.
struct PhaseSampling {
  double position_radius = 4.0;
  double momentum_radius = 2.0;
  double min_distance = 1e-3;
};

/// Uniform draw in the position/momentum balls, rejecting configurations with
/// any pair (or particle-to-center) distance below `min_distance`.
PhasePoint random_phase_point(int n, std::mt19937_64& rng, const PhaseSampling& policy = {});

}  // namespace bosebounds
