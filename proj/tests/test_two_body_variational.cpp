#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include "doctest.h"

#include "bosebounds/errors.hpp"
#include "bosebounds/generalized_eigen.hpp"
#include "bosebounds/hylleraas.hpp"
#include "bosebounds/quadrature.hpp"

using namespace bosebounds;

namespace {

// Independent oracle for  int f exp(-2 alpha (r1 + r2)) r1 r2 r12  over the
// triangle domain: trapezoid sums on an m^3 grid after substitutions that make
// the integrand decay double-exponentially at every end. r1 and r2 use
// r = exp(x - exp(-x)); r12 uses the tanh-sinh map onto [|r1 - r2|, r1 + r2].
double trapezoid_oracle(const std::function<double(double, double, double)>& f, double alpha, int m) {
  const double pi = std::acos(-1.0);
  const double x0 = -3.6, x1 = 4.2, t0 = -3.0, t1 = 3.0;
  const double hx = (x1 - x0) / (m - 1), ht = (t1 - t0) / (m - 1);
  std::vector<double> r(m), dr(m), v(m), dv(m);
  for (int i = 0; i < m; ++i) {
    const double x = x0 + i * hx;
    r[i] = std::exp(x - std::exp(-x));
    dr[i] = r[i] * (1.0 + std::exp(-x));
    const double t = t0 + i * ht, u = 0.5 * pi * std::sinh(t);
    v[i] = 0.5 * (1.0 + std::tanh(u));  // in [0, 1]
    dv[i] = 0.25 * pi * std::cosh(t) / (std::cosh(u) * std::cosh(u));
  }
  const auto end_weight = [m](int i) { return i == 0 || i == m - 1 ? 0.5 : 1.0; };
  long double total = 0.0L;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double lo = std::abs(r[i] - r[j]), hi = r[i] + r[j];
      long double inner = 0.0L;
      for (int k = 0; k < m; ++k) {
        const double r12 = lo + (hi - lo) * v[k];
        inner += end_weight(k) * f(r[i], r[j], r12) * r12 * dv[k];
      }
      inner *= (hi - lo) * ht;
      total += end_weight(i) * end_weight(j) * inner * std::exp(-2.0 * alpha * (r[i] + r[j])) * r[i] * r[j] * dr[i] *
               dr[j];
    }
  return static_cast<double>(total * hx * hx);
}

double simplex_integral(const std::function<double(double, double, double)>& f, int order_s, int order_inner,
                        double alpha) {
  long double total = 0.0L;
  for (const auto& node : simplex_quadrature(order_s, order_inner, alpha))
    total += node.weight * f(node.r1, node.r2, node.r12);
  return static_cast<double>(total);
}

// One-exponential helium-like energy: <T> = alpha^2, <V> = -2 Z alpha + (5/8) lambda alpha
double single_exponential_energy(double alpha, double z, double lambda) {
  return alpha * alpha - 2.0 * z * alpha + 0.625 * lambda * alpha;
}

double energy_at(const TwoBodyProblem& pb, int omega, double alpha) {
  TwoBodyOptions o;
  o.omega = omega;
  o.alpha = alpha;
  return solve_two_body(pb, o).energy;
}

const TwoBodyProblem kHelium{2.0, 1.0};

}  // namespace

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1") {
  for (int n : {1, 3, 8, 14}) {
    const auto rule = gauss_legendre(n);
    REQUIRE(rule.size() == static_cast<std::size_t>(n));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("Gauss-Laguerre with x^a weight") {
  for (double a : {0.0, 2.0, 5.5}) {
    const auto rule = gauss_laguerre(10, a);
    for (int k = 0; k <= 19; ++k) {
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      CHECK(sum == doctest::Approx(std::tgamma(k + a + 1.0)).epsilon(1e-11));
    }
  }
  CHECK_THROWS_AS(gauss_laguerre(0), InvalidArgument);
  CHECK_THROWS_AS(gauss_laguerre(4, -1.5), InvalidArgument);
}

TEST_CASE("simplex quadrature: positive weights and nodes inside the domain") {
  for (const auto& node : simplex_quadrature(8, 7, 1.3)) {
    CHECK(node.weight > 0.0);
    CHECK(node.r12 >= std::abs(node.r1 - node.r2) - 1e-14);
    CHECK(node.r12 <= node.r1 + node.r2 + 1e-14);
  }
  CHECK_THROWS_AS(simplex_quadrature(1, 4), InvalidArgument);
  CHECK_THROWS_AS(simplex_quadrature(4, 4, 0.0), InvalidArgument);
}

TEST_CASE("simplex quadrature: degree-0 integrand is exact from order 3") {
  // int exp(-2 alpha s) r1 r2 r12 = 2 (2 / (2 alpha)^3)^2 = 1 / (8 alpha^6);
  // the measure is degree 5 in s and degree 4 in the inner variable
  const auto one = [](double, double, double) { return 1.0; };
  for (double alpha : {1.0, 1.7}) {
    const double exact = 1.0 / (8.0 * std::pow(alpha, 6));
    for (int order : {3, 4, 9})
      CHECK(simplex_integral(one, order, order, alpha) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("simplex quadrature matches the 200^3 trapezoid oracle") {
  const auto one = [](double, double, double) { return 1.0; };
  const double oracle = trapezoid_oracle(one, 1.0, 200);
  CHECK(oracle == doctest::Approx(0.125).epsilon(1e-10));
  CHECK(std::abs(simplex_integral(one, 6, 6, 1.0) - oracle) / oracle < 1e-10);

  const auto poly = [](double r1, double r2, double r12) {
    return 1.0 + r1 * r12 * r12 + std::pow(r1 - r2, 2) * r12 + std::pow(r1 + r2, 3);
  };
  const double poly_oracle = trapezoid_oracle(poly, 1.0, 200);
  CHECK(std::abs(simplex_integral(poly, 8, 8, 1.0) - poly_oracle) / poly_oracle < 1e-10);
}

TEST_CASE("generalized eigenpair: diagonal problem") {
  Eigen::MatrixXd h(2, 2), s = Eigen::MatrixXd::Identity(2, 2);
  h << 1, 0, 0, 2;
  const auto p = smallest_generalized_eigenpair(h, s);
  CHECK(p.value == doctest::Approx(1.0));
  CHECK(std::abs(p.vector(0)) == doctest::Approx(1.0));
  CHECK(p.vector(1) == doctest::Approx(0.0));
}

TEST_CASE("generalized eigenpair: constructed spectrum") {
  // H = S V D V^T S with V^T S V = I has generalized eigenvalues D.
  std::mt19937_64 rng(123);
  std::normal_distribution<double> g;
  Eigen::MatrixXd b(3, 3), q0(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = g(rng), q0(i, j) = g(rng);
  const Eigen::MatrixXd s = b * b.transpose() + Eigen::MatrixXd::Identity(3, 3);
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(q0).householderQ();
  const Eigen::MatrixXd l = s.llt().matrixL();
  const Eigen::MatrixXd v = l.transpose().triangularView<Eigen::Upper>().solve(q);
  const Eigen::Vector3d d(0.7, -1.3, 2.1);
  Eigen::MatrixXd h = s * v * d.asDiagonal() * v.transpose() * s;
  h = 0.5 * (h + h.transpose());

  const auto p = smallest_generalized_eigenpair(h, s);
  CHECK(p.value == doctest::Approx(-1.3).epsilon(1e-12));
  CHECK(p.residual <= 1e-10);
  CHECK((p.vector.transpose() * s * p.vector)(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  // eigenvector parallel to the constructed one
  const double overlap = std::abs((v.col(1).transpose() * s * p.vector)(0, 0));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("generalized eigenpair: near-singular overlap is rejected") {
  const double eps = 2e-12;  // condition ~ 2/eps = 1e12
  Eigen::MatrixXd s(2, 2), h = Eigen::MatrixXd::Identity(2, 2);
  s << 1, 1 - eps, 1 - eps, 1;
  try {
    smallest_generalized_eigenpair(h, s);
    FAIL("expected ConditioningError");
  } catch (const ConditioningError& e) {
    CHECK(e.basis_size() == 2);
    CHECK(e.condition() > kMaxOverlapCondition);
    CHECK(std::string(e.what()).find("basis size 2") != std::string::npos);
  }
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 0.5, 0, 1;
  CHECK_THROWS_AS(smallest_generalized_eigenpair(asym, Eigen::MatrixXd::Identity(2, 2)), InvalidArgument);
}

TEST_CASE("basis: index set, size and nesting") {
  for (int omega = 0; omega <= 10; ++omega) {
    const HylleraasBasis basis{1.0, omega};
    const auto idx = basis.indices();
    std::size_t expected = 0;
    for (int l = 0; l <= omega; ++l)
      for (int m = 0; l + 2 * m <= omega; ++m)
        for (int n = 0; l + 2 * m + n <= omega; ++n) ++expected;
    CHECK(idx.size() == expected);
    for (const auto& i : idx) CHECK(i.l + 2 * i.m + i.n <= omega);
    if (omega > 0) {
      const auto prev = HylleraasBasis{1.0, omega - 1}.indices();
      for (std::size_t k = 0; k < prev.size(); ++k) {
        CHECK(prev[k].l == idx[k].l);
        CHECK(prev[k].m == idx[k].m);
        CHECK(prev[k].n == idx[k].n);
      }
    }
  }
  CHECK(HylleraasBasis{1.0, 8}.size() == 95);
}

TEST_CASE("assemble: symmetric matrices, Rayleigh quotient of the single function") {
  const auto mats = assemble({1.0, 0}, {1.0, 0.0});
  REQUIRE(mats.overlap.rows() == 1);
  CHECK(mats.hamiltonian()(0, 0) / mats.overlap(0, 0) == doctest::Approx(-1.0).epsilon(1e-10));

  const auto big = assemble({2.0, 4}, kHelium);
  CHECK((big.overlap - big.overlap.transpose()).norm() == 0.0);
  CHECK((big.kinetic - big.kinetic.transpose()).norm() == 0.0);
  CHECK((big.potential - big.potential.transpose()).norm() == 0.0);
  CHECK_THROWS_AS(assemble({1.0, 2}, {0.0, 1.0}), InvalidArgument);
}

TEST_CASE("assemble: overlap admits a Cholesky factor for omega <= 10 near the optimum") {
  for (int omega = 0; omega <= 10; ++omega) {
    const auto mats = assemble({2.4, omega}, kHelium);
    const Eigen::VectorXd d = mats.overlap.diagonal().cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd scaled = d.asDiagonal() * mats.overlap * d.asDiagonal();
    CAPTURE(omega);
    CHECK(scaled.llt().info() == Eigen::Success);
  }
}

TEST_CASE("single exponential: analytic energy curve") {
  for (double alpha : {1.0, 1.5, 27.0 / 16.0, 2.2})
    CHECK(energy_at(kHelium, 0, alpha) == doctest::Approx(single_exponential_energy(alpha, 2.0, 1.0)).epsilon(1e-12));
  CHECK(energy_at(kHelium, 0, 27.0 / 16.0) == doctest::Approx(-2.84766).epsilon(1e-4 / 2.85));
  CHECK(energy_at({1.0, -1.0}, 0, 1.3) == doctest::Approx(single_exponential_energy(1.3, 1.0, -1.0)).epsilon(1e-12));
}

TEST_CASE("separable limit") {
  CHECK(energy_at({1.0, 0.0}, 0, 1.0) == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(energy_at({2.0, 0.0}, 0, 2.0) == doctest::Approx(-4.0).epsilon(1e-8));
  CHECK(energy_at({2.0, 0.0}, 4, 1.7) == doctest::Approx(-4.0).epsilon(1e-4));
}

TEST_CASE("alpha search on the single exponential finds Z - 5/16") {
  TwoBodyOptions o;
  o.omega = 0;
  o.search.tolerance = 1e-9;
  const auto sol = solve_two_body(kHelium, o);
  CHECK(sol.basis.alpha == doctest::Approx(27.0 / 16.0).epsilon(1e-6));
  CHECK(sol.energy == doctest::Approx(-std::pow(27.0 / 16.0, 2)).epsilon(1e-8));
  CHECK(sol.virial_residual < 1e-6);
}

TEST_CASE("Rayleigh-Ritz monotonicity in omega at fixed alpha") {
  double prev = 0.0;
  for (int omega = 0; omega <= 8; ++omega) {
    const double e = energy_at(kHelium, omega, 2.2);
    CAPTURE(omega);
    if (omega > 0) CHECK(e <= prev + 1e-12);
    prev = e;
  }
}

TEST_CASE("solution coefficients are normalized in the overlap metric") {
  TwoBodyOptions o;
  o.omega = 4;
  o.alpha = 2.0;
  const auto sol = solve_two_body(kHelium, o);
  const auto mats = assemble(sol.basis, kHelium, sol.quadrature);
  CHECK((sol.coeffs.transpose() * mats.overlap * sol.coeffs)(0, 0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK((sol.coeffs.transpose() * mats.hamiltonian() * sol.coeffs)(0, 0) == doctest::Approx(sol.energy).epsilon(1e-9));
  CHECK(sol.eigen_residual < 1e-10);
  CHECK(sol.kinetic + sol.potential == doctest::Approx(sol.energy).epsilon(1e-10));
}

TEST_CASE("attractive coupling lowers the energy at a fixed basis") {
  double prev = energy_at({1.0, 0.5}, 4, 1.5);
  for (double lambda : {0.0, -0.5, -1.0, -2.0}) {
    const double e = energy_at({1.0, lambda}, 4, 1.5);
    CHECK(e <= prev);
    prev = e;
  }
}

TEST_CASE("fixed-grain pair binds below two free hydrogenic bodies") {
  TwoBodyOptions o;
  o.omega = 4;
  const auto sol = solve_two_body({1.0, -1.0}, o);
  CHECK(sol.energy < -1.0);
  CHECK(sol.virial_residual < 1e-3);
}

TEST_CASE("quadrature convergence: doubling orders") {
  TwoBodyOptions o;
  o.omega = 6;
  o.alpha = 2.2;
  const double base = solve_two_body(kHelium, o).energy;
  o.quadrature = {24, 24};
  CHECK(std::abs(solve_two_body(kHelium, o).energy - base) < 1e-8);
}

TEST_CASE("helium-like atom converges at omega = 8") {
  TwoBodyOptions o;
  o.omega = 8;
  const auto e8 = solve_two_body(kHelium, o);
  o.omega = 7;
  const auto e7 = solve_two_body(kHelium, o);
  CHECK(e8.energy <= -2.9030);
  CHECK(std::abs(e8.energy - e7.energy) < 2e-4);
  CHECK(e8.virial_residual < 1e-3);
  CHECK(e8.condition <= kMaxOverlapCondition);
}

TEST_CASE("conditioning: usable omega and errors") {
  CHECK(largest_usable_omega(kHelium, 2.4, 10) == 10);
  TwoBodyOptions o;
  o.omega = -1;
  CHECK_THROWS_AS(solve_two_body(kHelium, o), InvalidArgument);
  o.omega = 2;
  CHECK_THROWS_AS(solve_two_body({-1.0, 1.0}, o), InvalidArgument);
}
