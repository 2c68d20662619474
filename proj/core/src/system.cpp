#include "bosebounds/system.hpp"

#include <cmath>

#include "bosebounds/errors.hpp"

namespace bosebounds {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::coulomb_atom: return "coulomb_atom";
    case Family::newton_fixed_grain: return "newton_fixed_grain";
    case Family::newton_intrinsic: return "newton_intrinsic";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  if (name == "coulomb_atom") return Family::coulomb_atom;
  if (name == "newton_fixed_grain") return Family::newton_fixed_grain;
  if (name == "newton_intrinsic") return Family::newton_intrinsic;
  throw InvalidArgument("unknown system family '" + std::string(name) + "'");
}

void SystemSpec::validate() const {
  if (n < 1) throw InvalidArgument("particle count must be >= 1");
  switch (family) {
    case Family::coulomb_atom:
      if (z < 1) throw InvalidArgument("charge multiplier z must be >= 1");
      break;
    case Family::newton_fixed_grain:
      if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidArgument("mass ratio beta must be > 0");
      if (!(gravity_scale > 0.0)) throw InvalidArgument("gravity scale must be > 0");
      break;
    case Family::newton_intrinsic:
      if (n < 2) throw InvalidArgument("the intrinsic star needs N >= 2");
      break;
  }
}

ReducedSystem reduce(const SystemSpec& spec) {
  spec.validate();
  ReducedSystem sys;
  sys.family = spec.family;
  sys.n = spec.n;
  const double n = spec.n;
  switch (spec.family) {
    case Family::coulomb_atom: {
      sys.kinetic_coeff = 0.5;
      sys.central_coeff = n;
      sys.pair_coeff = 1.0;
      const double z2 = double(spec.z) * spec.z;
      sys.energy_unit = z2 * z2;
      sys.length_unit = 1.0 / z2;
      break;
    }
    case Family::newton_fixed_grain: {
      // M = 1/beta in units of m; G' = gravity_scale * G.
      const double grain_mass = 1.0 / spec.beta;
      const double g = spec.gravity_scale;
      sys.kinetic_coeff = 0.5;
      sys.central_coeff = 1.0;
      sys.pair_coeff = -spec.beta;
      sys.energy_unit = g * g * grain_mass * grain_mass;
      sys.length_unit = 1.0 / (g * grain_mass);
      break;
    }
    case Family::newton_intrinsic:
      sys.kinetic_coeff = 1.0 / (2.0 * n);
      sys.central_coeff = 0.0;
      sys.pair_coeff = -1.0;
      sys.energy_unit = 1.0;
      sys.length_unit = 1.0;
      break;
  }
  if (spec.pair_rescale && spec.n > 1) sys.pair_coeff /= (n - 1.0);
  return sys;
}

namespace {

double norm2(const Vec3& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

Vec3 diff(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

void check_shape(const ReducedSystem& sys, const PhasePoint& x) {
  if (x.positions.size() != static_cast<std::size_t>(sys.n) || x.momenta.size() != x.positions.size())
    throw InvalidArgument("phase point does not match particle count");
}

double inverse_distance(const Vec3& a, const Vec3& b) {
  const double r = std::sqrt(norm2(diff(a, b)));
  if (!(r > 0.0)) throw SingularConfiguration("coincident particles");
  return 1.0 / r;
}

double inverse_radius(const Vec3& q) {
  const double r = std::sqrt(norm2(q));
  if (!(r > 0.0)) throw SingularConfiguration("particle at the attracting center");
  return 1.0 / r;
}

}  // namespace

double classical_energy(const ReducedSystem& sys, const PhasePoint& x) {
  check_shape(sys, x);
  const int n = sys.n;
  long double total = 0.0L;
  if (sys.family == Family::newton_intrinsic) {
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l) {
        total += sys.kinetic_coeff * norm2(diff(x.momenta[k], x.momenta[l]));
        total += sys.pair_coeff * inverse_distance(x.positions[k], x.positions[l]);
      }
    return static_cast<double>(total);
  }
  for (int k = 0; k < n; ++k) {
    total += sys.kinetic_coeff * norm2(x.momenta[k]);
    if (sys.central_coeff != 0.0) total -= sys.central_coeff * inverse_radius(x.positions[k]);
  }
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      total += sys.pair_coeff * inverse_distance(x.positions[k], x.positions[l]);
  return static_cast<double>(total);
}

std::vector<PairTerm> pair_terms(const ReducedSystem& sys, const PhasePoint& x) {
  check_shape(sys, x);
  const int n = sys.n;
  if (n < 2) throw InvalidArgument("pair decomposition needs N >= 2");
  std::vector<PairTerm> terms;
  terms.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);

  if (sys.family == Family::newton_intrinsic) {
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l) {
        const double w = sys.kinetic_coeff * norm2(diff(x.momenta[k], x.momenta[l])) +
                         sys.pair_coeff * inverse_distance(x.positions[k], x.positions[l]);
        terms.push_back({k, l, w});
      }
    return terms;
  }

  const double share = 1.0 / (n - 1.0);
  std::vector<double> one_body(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double h = sys.kinetic_coeff * norm2(x.momenta[k]);
    if (sys.central_coeff != 0.0) h -= sys.central_coeff * inverse_radius(x.positions[k]);
    one_body[k] = h;
  }
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      const double u = share * (one_body[k] + one_body[l]) +
                       sys.pair_coeff * inverse_distance(x.positions[k], x.positions[l]);
      terms.push_back({k, l, u});
    }
  return terms;
}

namespace {

Vec3 uniform_in_ball(double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-radius, radius);
  for (;;) {
    Vec3 v{coord(rng), coord(rng), coord(rng)};
    if (norm2(v) <= radius * radius) return v;
  }
}

}  // namespace

PhasePoint random_phase_point(int n, std::mt19937_64& rng, const PhaseSampling& policy) {
  if (n < 1) throw InvalidArgument("particle count must be >= 1");
  const double min2 = policy.min_distance * policy.min_distance;
  PhasePoint x;
  x.positions.reserve(n);
  while (static_cast<int>(x.positions.size()) < n) {
    const Vec3 q = uniform_in_ball(policy.position_radius, rng);
    bool ok = norm2(q) >= min2;
    for (const auto& other : x.positions) ok = ok && norm2(diff(q, other)) >= min2;
    if (ok) x.positions.push_back(q);
  }
  x.momenta.reserve(n);
  for (int k = 0; k < n; ++k) x.momenta.push_back(uniform_in_ball(policy.momentum_radius, rng));
  return x;
}

}  // namespace bosebounds
