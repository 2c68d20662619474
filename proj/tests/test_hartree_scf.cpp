#include <cmath>
#include <numeric>

#include "doctest.h"

#include "bosebounds/errors.hpp"
#include "bosebounds/hartree.hpp"
#include "bosebounds/hylleraas.hpp"

using namespace bosebounds;

namespace {

RadialOrbital normalized(RadialOrbital phi) {
  const double norm = std::sqrt(phi.norm_squared());
  for (double& u : phi.u) u /= norm;
  return phi;
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("radial quadrature primitives") {
  const double h = 0.01;
  std::vector<double> cubic(201), quartic(201);
  for (int i = 0; i <= 200; ++i) {
    const double x = i * h;
    cubic[i] = x * x * x - 2.0 * x + 1.0;
    quartic[i] = x * x * x * x;
  }
  // Simpson is exact for cubics on [0, 2]
  CHECK(simpson(cubic, h) == doctest::Approx(4.0 - 4.0 + 2.0).epsilon(1e-13));
  CHECK_THROWS_AS(simpson(std::vector<double>(4, 1.0), h), InvalidArgument);

  const auto q = cumulative_integral(cubic, h);
  for (int i : {0, 1, 57, 200}) {
    const double x = i * h;
    CHECK(q[i] == doctest::Approx(x * x * x * x / 4.0 - x * x + x).epsilon(1e-12).scale(1.0));
  }

  const auto d = derivative(quartic, h);
  for (int i : {0, 1, 100, 199, 200}) {
    const double x = i * h;
    CHECK(d[i] == doctest::Approx(4.0 * x * x * x).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("constant orbital has no interior kinetic contribution") {
  std::vector<double> flat(101, 0.3);
  const auto d = derivative(flat, 0.1);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("tridiagonal eigenpair: discrete Laplacian") {
  // eigenvalues 2 - 2 cos(k pi / (n + 1))
  const int n = 50;
  const std::vector<double> diag(n, 2.0);
  const auto pair = lowest_tridiagonal_eigenpair(diag, -1.0);
  const double pi = std::acos(-1.0);
  CHECK(pair.value == doctest::Approx(2.0 - 2.0 * std::cos(pi / (n + 1))).epsilon(1e-12));
  const double norm = std::sqrt(std::inner_product(pair.vector.begin(), pair.vector.end(), pair.vector.begin(), 0.0));
  CHECK(norm == doctest::Approx(1.0));
  for (double v : pair.vector) CHECK(v > 0.0);
  CHECK(sturm_count(diag, -1.0, pair.value - 1e-9) == 0);
  CHECK(sturm_count(diag, -1.0, pair.value + 1e-9) == 1);
  CHECK(sturm_count(diag, -1.0, 4.0) == n);
}

TEST_CASE("functional coefficients") {
  const auto atom = functional_coeffs({Family::coulomb_atom, 2});
  CHECK(atom.kinetic == 1.0);
  CHECK(atom.central == -4.0);
  CHECK(atom.pair == 1.0);

  const auto grain = functional_coeffs({Family::newton_fixed_grain, 3, 1, 1.0});
  CHECK(grain.kinetic == 1.5);
  CHECK(grain.central == -3.0);
  CHECK(grain.pair == -3.0);

  const auto star = functional_coeffs({Family::newton_intrinsic, 4});
  CHECK(star.kinetic == 1.5);
  CHECK(star.central == 0.0);
  CHECK(star.pair == -6.0);

  SystemSpec rescaled{Family::coulomb_atom, 5};
  rescaled.pair_rescale = true;
  CHECK(functional_coeffs(rescaled).pair == doctest::Approx(10.0 / 4.0));

  const auto limit = coulomb_limit_coeffs();
  CHECK(limit.kinetic == 0.5);
  CHECK(limit.central == -1.0);
  CHECK(limit.pair == 0.5);
  const auto newton = newton_limit_coeffs();
  CHECK(newton.central == 0.0);
  CHECK(newton.pair == -0.5);
}

TEST_CASE("forms of the hydrogen 1s orbital") {
  const auto phi = hydrogenic_orbital({60.0, 6000});
  CHECK(phi.norm_squared() == doctest::Approx(1.0).epsilon(1e-8));
  const auto f = evaluate_forms(phi);
  CHECK(f.kinetic == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(f.central == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(f.pair == doctest::Approx(0.625).epsilon(1e-7));
}

TEST_CASE("forms reject an unnormalized orbital") {
  auto phi = hydrogenic_orbital({60.0, 6000});
  for (double& u : phi.u) u *= 1.01;
  CHECK_THROWS_AS(evaluate_forms(phi), InvalidArgument);
}

TEST_CASE("dilation scaling law") {
  const auto phi = normalized(hydrogenic_orbital({40.0, 4000}, 0.8));
  const auto f = evaluate_forms(phi);
  for (double lambda : {0.5, 1.0, 2.0, 3.3}) {
    const auto scaled = rescale(phi, lambda);
    CHECK(scaled.norm_squared() == doctest::Approx(phi.norm_squared()).epsilon(1e-13));
    const auto g = evaluate_forms(scaled);
    CHECK(relative(g.kinetic, lambda * lambda * f.kinetic) < 1e-10);
    CHECK(relative(g.central, lambda * f.central) < 1e-10);
    CHECK(relative(g.pair, lambda * f.pair) < 1e-10);
  }
  const auto same = rescale(phi, 1.0);
  CHECK(same.u == phi.u);
  CHECK(same.grid.r_max == phi.grid.r_max);
  CHECK_THROWS_AS(rescale(phi, 0.0), InvalidArgument);
}

TEST_CASE("rescale by 2 on 1s quadruples k and doubles c, i") {
  const auto phi = hydrogenic_orbital({60.0, 6000});
  const auto f = evaluate_forms(phi);
  const auto g = evaluate_forms(rescale(phi, 2.0));
  CHECK(g.kinetic == doctest::Approx(4.0 * f.kinetic).epsilon(1e-12));
  CHECK(g.central == doctest::Approx(2.0 * f.central).epsilon(1e-12));
  CHECK(g.pair == doctest::Approx(2.0 * f.pair).epsilon(1e-12));
}

TEST_CASE("SCF: pure hydrogen") {
  const auto r = scf_solve({0.5, -1.0, 0.0}, {});
  CHECK(relative(r.energy, -0.5) < 1e-6);
  CHECK(r.virial_residual < 1e-4);
  const auto exact = hydrogenic_orbital(r.orbital.grid);
  double diff = 0.0;
  for (std::size_t i = 0; i < exact.u.size(); ++i) diff = std::max(diff, std::abs(exact.u[i] - r.orbital.u[i]));
  CHECK(diff < 1e-4);
}

TEST_CASE("SCF: energy decreases along the iterations") {
  const auto r = scf_solve({1.0, -4.0, 1.0}, {});
  REQUIRE(r.energy_trace.size() > 2);
  for (std::size_t k = 1; k < r.energy_trace.size(); ++k)
    CHECK(r.energy_trace[k] <= r.energy_trace[k - 1] + 1e-12 * std::abs(r.energy_trace[k]));
}

TEST_CASE("SCF: limiting functionals are stable under grid refinement") {
  for (const auto& coeffs : {coulomb_limit_coeffs(), newton_limit_coeffs()}) {
    ScfOptions coarse, fine;
    fine.grid.n = 2 * coarse.grid.n;
    const auto a = scf_solve(coeffs, coarse);
    const auto b = scf_solve(coeffs, fine);
    CHECK(std::abs(a.energy - b.energy) < 1e-6);
    CHECK(a.virial_residual < 1e-4);
    CHECK(b.virial_residual < 1e-4);
    CHECK(b.energy < 0.0);
    if (coeffs.central != 0.0) CHECK(b.energy > -0.5);
  }
}

TEST_CASE("SCF: virial stationarity across families and N") {
  for (Family family : {Family::coulomb_atom, Family::newton_fixed_grain, Family::newton_intrinsic})
    for (int n : {2, 3, 7, 20}) {
      const auto r = scf_solve(functional_coeffs({family, n}), {});
      CAPTURE(to_string(family));
      CAPTURE(n);
      CHECK(r.virial_residual < 1e-4);
      CHECK(r.energy == doctest::Approx(functional_value(functional_coeffs({family, n}), r.forms)));
    }
}

TEST_CASE("SCF: errors") {
  CHECK_THROWS_AS(scf_solve({0.5, 1.0, 1.0}, {}), InvalidArgument);
  CHECK_THROWS_AS(scf_solve({0.0, -1.0, 0.0}, {}), InvalidArgument);
  ScfOptions options;
  options.max_iterations = 2;
  try {
    scf_solve(coulomb_limit_coeffs(), options);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::string(e.what()).find("last energies") != std::string::npos);
  }
  options = {};
  options.grid.n = 7;
  CHECK_THROWS_AS(scf_solve(coulomb_limit_coeffs(), options), InvalidArgument);
}

TEST_CASE("Hartree upper bounds") {
  SUBCASE("one electron: coincides with the exact value") {
    const auto phi = hydrogenic_orbital({60.0, 6000});
    const auto e = hartree_upper_bound({Family::coulomb_atom, 1}, phi);
    CHECK(e.kind() == BoundKind::upper);
    CHECK(relative(e.value(), -0.5) < 1e-6);
  }
  SUBCASE("two electrons: above the correlated two-body value") {
    const SystemSpec spec{Family::coulomb_atom, 2};
    const auto scf = scf_solve(functional_coeffs(spec), {});
    const auto bound = hartree_upper_bound(spec, scf.orbital);
    CHECK(bound.value() == doctest::Approx(scf.energy));
    TwoBodyOptions o;
    o.omega = 4;
    CHECK(solve_two_body({2.0, 1.0}, o).energy <= bound.value());
  }
  SUBCASE("fixed grain, three bodies: negative") {
    const SystemSpec spec{Family::newton_fixed_grain, 3};
    CHECK(hartree_upper_bound(spec, hydrogenic_orbital({60.0, 6000})).value() <= 0.0);
  }
  SUBCASE("intrinsic two-body: above the exact -1/4") {
    const SystemSpec spec{Family::newton_intrinsic, 2};
    CHECK(scf_solve(functional_coeffs(spec), {}).energy >= -0.25);
  }
}
