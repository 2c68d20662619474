#include "bosebounds/hylleraas.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "bosebounds/errors.hpp"
#include "bosebounds/generalized_eigen.hpp"
#include "bosebounds/quadrature.hpp"

namespace bosebounds {

std::vector<HylleraasIndex> HylleraasBasis::indices() const {
  if (omega < 0) throw InvalidArgument("basis order omega must be >= 0");
  std::vector<HylleraasIndex> out;
  // grouped by total degree so that basis(omega) is a prefix of basis(omega + 1)
  for (int degree = 0; degree <= omega; ++degree)
    for (int m = 0; 2 * m <= degree; ++m)
      for (int n = 0; n + 2 * m <= degree; ++n) out.push_back({degree - 2 * m - n, m, n});
  return out;
}

QuadratureOrders QuadratureOrders::resolved(int omega) const {
  return {radial > 0 ? radial : omega + 6, inner > 0 ? inner : omega + 6};
}

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<double> powers(double x, int max_power) {
  std::vector<double> p(static_cast<std::size_t>(max_power) + 1, 1.0);
  for (int k = 1; k <= max_power; ++k) p[k] = p[k - 1] * x;
  return p;
}

// Generalized Laguerre polynomial L_l^(k)(x) and its derivative.
std::pair<double, double> laguerre(int l, double k, double x) {
  double prev = 0.0, cur = 1.0;
  double dprev = 0.0, dcur = 0.0;
  for (int j = 0; j < l; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
    const double dnext = ((2.0 * j + 1.0 + k - x) * dcur - cur - (j + k) * dprev) / (j + 1.0);
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
  }
  return {cur, dcur};
}

// Basis values, first derivatives and node factors at the simplex quadrature
// nodes. The common factor exp(-alpha s) is stripped from every function; the
// weights carry exp(-2 alpha s) and the volume element.
struct NodeTables {
  MatrixXd val, d1, d2, d12;
  VectorXd w, cos1, cos2, pot;
};

NodeTables tabulate(const HylleraasBasis& basis, const TwoBodyProblem& problem, QuadratureOrders orders) {
  if (!(problem.central_strength > 0.0)) throw InvalidArgument("central strength Z must be > 0");
  if (!(basis.alpha > 0.0)) throw InvalidArgument("exponent alpha must be > 0");
  const auto idx = basis.indices();
  const auto resolved = orders.resolved(basis.omega);
  const auto nodes = simplex_quadrature(resolved.radial, resolved.inner, basis.alpha);

  const Index nb = static_cast<Index>(idx.size());
  const Index nq = static_cast<Index>(nodes.size());
  const double alpha = basis.alpha;
  const int max_power = 2 * basis.omega + 1;

  NodeTables tab;
  tab.val.resize(nq, nb);
  tab.d1.resize(nq, nb);
  tab.d2.resize(nq, nb);
  tab.d12.resize(nq, nb);
  tab.w.resize(nq);
  tab.cos1.resize(nq);
  tab.cos2.resize(nq);
  tab.pot.resize(nq);
  for (Index q = 0; q < nq; ++q) {
    const auto& node = nodes[q];
    const double s = node.r1 + node.r2;
    const double t = node.r1 - node.r2;
    const double u = node.r12;
    const auto pt = powers(t, max_power);
    const auto pu = powers(u, max_power);
    for (Index a = 0; a < nb; ++a) {
      const auto [l, m, n] = idx[a];
      // The s-dependence is carried by a generalized Laguerre polynomial of
      // degree l; the change from s^l is triangular, so the span is unchanged.
      const auto [lag, dlag] = laguerre(l, 5.0 + 2.0 * (2 * m + n), 2.0 * alpha * s);
      const double tu = pt[2 * m] * pu[n];
      const double p = lag * tu;
      const double ds = 2.0 * alpha * dlag * tu;
      const double dt = m > 0 ? 2.0 * m * lag * pt[2 * m - 1] * pu[n] : 0.0;
      const double du = n > 0 ? n * lag * pt[2 * m] * pu[n - 1] : 0.0;
      tab.val(q, a) = p;
      tab.d1(q, a) = -alpha * p + ds + dt;
      tab.d2(q, a) = -alpha * p + ds - dt;
      tab.d12(q, a) = du;
    }
    const double r1 = node.r1, r2 = node.r2, r12 = node.r12;
    tab.w(q) = node.weight;
    tab.cos1(q) = (r1 * r1 - r2 * r2 + r12 * r12) / (2.0 * r1 * r12);
    tab.cos2(q) = (r2 * r2 - r1 * r1 + r12 * r12) / (2.0 * r2 * r12);
    tab.pot(q) = -problem.central_strength * (1.0 / r1 + 1.0 / r2) + problem.pair_coeff / r12;
  }
  return tab;
}

MatrixXd symmetrized(const MatrixXd& m) { return 0.5 * (m + m.transpose()); }

// Gram matrices of the kinetic and potential forms for the columns of the tables.
MatrixXd kinetic_form(const NodeTables& tab, const MatrixXd& d1, const MatrixXd& d2, const MatrixXd& d12,
                      double kinetic_coeff) {
  const MatrixXd wd1 = tab.w.asDiagonal() * d1;
  const MatrixXd wd2 = tab.w.asDiagonal() * d2;
  const MatrixXd wd12 = tab.w.asDiagonal() * d12;
  MatrixXd kin = d1.transpose() * wd1 + d2.transpose() * wd2 + 2.0 * d12.transpose() * wd12;
  const MatrixXd cross =
      d1.transpose() * (tab.cos1.asDiagonal() * wd12) + d2.transpose() * (tab.cos2.asDiagonal() * wd12);
  kin += cross + cross.transpose();
  return symmetrized(kinetic_coeff * kin);
}

MatrixXd potential_form(const NodeTables& tab, const MatrixXd& val) {
  return symmetrized(val.transpose() * ((tab.w.array() * tab.pot.array()).matrix().asDiagonal() * val));
}

}  // namespace

HylleraasMatrices assemble(const HylleraasBasis& basis, const TwoBodyProblem& problem,
                           QuadratureOrders orders) {
  const NodeTables tab = tabulate(basis, problem, orders);
  HylleraasMatrices out;
  out.overlap = symmetrized(tab.val.transpose() * (tab.w.asDiagonal() * tab.val));
  out.kinetic = kinetic_form(tab, tab.d1, tab.d2, tab.d12, problem.kinetic_coeff);
  out.potential = potential_form(tab, tab.val);
  return out;
}

namespace {

// Rayleigh-Ritz in an orthonormalized representation: the weighted value table
// A = W^1/2 V is QR-factored, so R is the Cholesky factor of S obtained without
// forming S, and all forms are evaluated on the columns of (table) R^-1.
HylleraasSolution solve_fixed_alpha(const TwoBodyProblem& problem, int omega, double alpha,
                                    QuadratureOrders orders) {
  HylleraasBasis basis{alpha, omega};
  const NodeTables tab = tabulate(basis, problem, orders);
  const Index nb = tab.val.cols();
  const std::size_t size = static_cast<std::size_t>(nb);

  const MatrixXd weighted = tab.w.cwiseSqrt().asDiagonal() * tab.val;
  Eigen::HouseholderQR<MatrixXd> qr(weighted);
  const MatrixXd r = qr.matrixQR().topRows(nb).triangularView<Eigen::Upper>();

  const Eigen::JacobiSVD<MatrixXd> svd(r);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(nb - 1);
  const double condition = smin > 0.0 ? smax / smin : INFINITY;
  if (!(condition <= kMaxOverlapCondition))
    throw ConditioningError("overlap factor is numerically singular (basis size " + std::to_string(size) +
                                ", condition " + std::to_string(condition) + ")",
                            size, condition);

  const auto upper = r.triangularView<Eigen::Upper>();
  auto right_solve = [&](const MatrixXd& m) -> MatrixXd {
    // m R^-1
    return upper.transpose().solve(m.transpose()).transpose();
  };
  const MatrixXd val = right_solve(tab.val);
  const MatrixXd kin = kinetic_form(tab, right_solve(tab.d1), right_solve(tab.d2), right_solve(tab.d12),
                                    problem.kinetic_coeff);
  const MatrixXd pot = potential_form(tab, val);

  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(kin + pot);
  if (eig.info() != Eigen::Success) throw ConvergenceError("symmetric eigen solve failed");
  VectorXd y = eig.eigenvectors().col(0);
  VectorXd c = upper.solve(y);
  Index pivot = 0;
  c.cwiseAbs().maxCoeff(&pivot);
  if (c(pivot) < 0.0) {
    c = -c;
    y = -y;
  }

  HylleraasSolution sol;
  sol.basis = basis;
  sol.coeffs = c;
  sol.kinetic = y.dot(kin * y);
  sol.potential = y.dot(pot * y);
  sol.energy = sol.kinetic + sol.potential;
  sol.virial_residual = std::abs(2.0 * sol.kinetic + sol.potential) / std::abs(sol.energy);
  const VectorXd hy = (kin + pot) * y;
  sol.eigen_residual = (hy - sol.energy * y).norm() / hy.norm();
  sol.condition = condition;
  sol.quadrature = orders.resolved(omega);
  return sol;
}

}  // namespace

HylleraasSolution solve_two_body(const TwoBodyProblem& problem, const TwoBodyOptions& options) {
  if (options.omega < 0) throw InvalidArgument("basis order omega must be >= 0");
  if (!(problem.central_strength > 0.0)) throw InvalidArgument("central strength Z must be > 0");
  if (options.alpha) return solve_fixed_alpha(problem, options.omega, *options.alpha, options.quadrature);

  // an attractive pair contracts the state; widen the bracket by its one-parameter shift
  const double z = problem.central_strength + 0.3125 * std::max(0.0, -problem.pair_coeff);
  const double best = golden_section_minimize(
      [&](double alpha) { return solve_fixed_alpha(problem, options.omega, alpha, options.quadrature).energy; },
      options.search.lower_factor * z, options.search.upper_factor * z, options.search.tolerance);
  return solve_fixed_alpha(problem, options.omega, best, options.quadrature);
}

int largest_usable_omega(const TwoBodyProblem& problem, double alpha, int requested) {
  int usable = -1;
  for (int omega = 0; omega <= requested; ++omega) {
    try {
      solve_fixed_alpha(problem, omega, alpha, {});
      usable = omega;
    } catch (const ConditioningError&) {
      break;
    }
  }
  return usable;
}

namespace {

RelativeSolution relative_fixed_alpha(const HydrogenicProblem& pb, int omega, double alpha) {
  const int order = omega + 4;
  const auto rule = gauss_laguerre(order);
  const Index nb = omega + 1;
  MatrixXd s = MatrixXd::Zero(nb, nb), t = MatrixXd::Zero(nb, nb), v = MatrixXd::Zero(nb, nb);
  const double scale = 1.0 / (2.0 * alpha);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double r = rule.nodes[q] * scale;
    const double w = rule.weights[q] * scale * r * r;  // r^2 dr, exp(-2 alpha r) in the rule
    const auto pr = powers(r, omega);
    VectorXd f(nb), df(nb);
    for (Index k = 0; k < nb; ++k) {
      f(k) = pr[k];
      df(k) = -alpha * pr[k] + (k > 0 ? k * pr[k - 1] : 0.0);
    }
    s += w * f * f.transpose();
    t += (w / (2.0 * pb.effective_mass)) * df * df.transpose();
    v += (-pb.attraction * w / r) * f * f.transpose();
  }
  const auto pair = smallest_generalized_eigenpair(t + v, s);
  RelativeSolution sol;
  sol.alpha = alpha;
  sol.omega = omega;
  sol.coeffs = pair.vector;
  sol.energy = pair.value;
  const double kinetic = pair.vector.dot(t * pair.vector);
  const double potential = pair.vector.dot(v * pair.vector);
  sol.virial_residual = std::abs(2.0 * kinetic + potential) / std::abs(sol.energy);
  return sol;
}

}  // namespace

RelativeSolution solve_relative_problem(const HydrogenicProblem& pb, int omega, std::optional<double> alpha,
                                        double tolerance) {
  pb.validate();
  if (omega < 0) throw InvalidArgument("basis order omega must be >= 0");
  if (alpha) return relative_fixed_alpha(pb, omega, *alpha);
  const double natural = pb.effective_mass * pb.attraction;
  const double best = golden_section_minimize(
      [&](double a) { return relative_fixed_alpha(pb, omega, a).energy; }, 0.5 * natural, 2.5 * natural,
      tolerance);
  return relative_fixed_alpha(pb, omega, best);
}

}  // namespace bosebounds
