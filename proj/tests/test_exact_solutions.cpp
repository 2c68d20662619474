#include <cmath>

#include "doctest.h"

#include "bosebounds/errors.hpp"
#include "bosebounds/exact.hpp"
#include "bosebounds/hartree.hpp"
#include "bosebounds/hylleraas.hpp"

using namespace bosebounds;

TEST_CASE("hydrogenic_energy closed form") {
  CHECK(hydrogenic_energy({1.0, 1.0}) == -0.5);
  CHECK(hydrogenic_energy({0.5, 1.0}) == -0.25);
  CHECK(hydrogenic_energy({1.0, 2.0}) == -2.0);
  CHECK_THROWS_AS(hydrogenic_energy({0.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(hydrogenic_energy({1.0, -1.0}), InvalidArgument);
}

TEST_CASE("hydrogenic_energy scales as mu gamma^2") {
  for (double mu : {0.25, 0.5, 1.0, 3.0})
    for (double gamma : {0.5, 1.0, 2.5}) CHECK(hydrogenic_energy({mu, gamma}) == doctest::Approx(mu * gamma * gamma * -0.5));
}

TEST_CASE("fixed-grain one-body energy restores to -G^2 M^2 m^3 / 2") {
  CHECK(fixed_grain_one_body_energy() == -0.5);
  const auto sys = reduce({Family::newton_fixed_grain, 1, 1, 0.25});  // M = 4 m
  CHECK(sys.to_physical_energy(fixed_grain_one_body_energy()) == doctest::Approx(-0.5 * 16.0));
}

TEST_CASE("intrinsic two-body reduction") {
  const auto pb = reduce_two_body_intrinsic();
  CHECK(pb.effective_mass == 0.5);
  CHECK(pb.attraction == 1.0);
  CHECK(hydrogenic_energy(pb) == -0.25);
  CHECK(intrinsic_two_body_energy() == -0.25);
  // doubling the particle masses doubles the reduced mass and the energy
  CHECK(hydrogenic_energy({2.0 * pb.effective_mass, pb.attraction}) == doctest::Approx(2.0 * hydrogenic_energy(pb)));
}

TEST_CASE("two_newt_seed coefficients") {
  const auto spec = two_newt_seed(1.0);
  CHECK(spec.family == Family::newton_fixed_grain);
  CHECK(spec.n == 2);
  const auto sys = reduce(spec);
  CHECK(sys.central_coeff == 1.0);
  CHECK(sys.pair_coeff == -2.0);
  // same energy unit as the original system
  CHECK(sys.energy_unit == doctest::Approx(reduce({Family::newton_fixed_grain, 3, 1, 1.0}).energy_unit));
  CHECK(reduce(two_newt_seed(0.3)).pair_coeff == doctest::Approx(-0.6));
  CHECK_THROWS_AS(two_newt_seed(0.0), InvalidArgument);
}

TEST_CASE("two_newt_seed decouples as beta -> 0") {
  const auto sys = reduce(two_newt_seed(1e-9));
  TwoBodyOptions options;
  options.omega = 2;
  const auto sol = solve_two_body({sys.central_coeff, sys.pair_coeff, sys.kinetic_coeff}, options);
  CHECK(sol.energy == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("closed form agrees with the radial finite-difference eigenvalue") {
  for (double mu : {0.5, 1.0, 2.0})
    for (double gamma : {0.5, 1.0, 2.0}) {
      const auto scf = scf_solve({0.5 / mu, -gamma, 0.0}, {});
      const double exact = hydrogenic_energy({mu, gamma});
      CAPTURE(mu);
      CAPTURE(gamma);
      CHECK(std::abs(scf.energy - exact) / std::abs(exact) < 1e-6);
    }
}

TEST_CASE("variational relative-coordinate solve reproduces -1/4") {
  const auto sol = solve_relative_problem(reduce_two_body_intrinsic(), 4);
  CHECK(sol.energy == doctest::Approx(-0.25).epsilon(1e-9));
  CHECK(sol.energy >= -0.25 - 1e-12);
  CHECK(sol.virial_residual < 1e-6);
}
