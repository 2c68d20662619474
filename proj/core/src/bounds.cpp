#include "bosebounds/bounds.hpp"

#include <cmath>

#include <boost/math/tools/roots.hpp>

#include "bosebounds/errors.hpp"

namespace bosebounds {

BigInt p_coul(int n) {
  const BigInt b = n;
  return b * b * (b - 1);
}

BigInt p_newt(int n) {
  const BigInt b = n;
  return b * (b - 1) * (b - 2);
}

BigInt family_polynomial(Family family, int n) {
  return family == Family::newton_fixed_grain ? p_newt(n) : p_coul(n);
}

int chain_base(Family family) { return family == Family::newton_fixed_grain ? 3 : 2; }

Rational chain_factor(Family family, int n) {
  if (n <= chain_base(family))
    throw InvalidArgument("chain factor needs N > " + std::to_string(chain_base(family)));
  const BigInt b = n;
  if (family == Family::newton_fixed_grain) return Rational(b, b - 3);
  return Rational(b * b, (b - 1) * (b - 2));
}

Rational telescope(Family family, int n) {
  if (n <= chain_base(family))
    throw InvalidArgument("telescope needs N > " + std::to_string(chain_base(family)));
  Rational product = 1;
  for (int k = chain_base(family) + 1; k <= n; ++k) product *= chain_factor(family, k);
  return product;
}

Rational corollary_coefficient(Family family, int n) {
  const int base = chain_base(family);
  if (n < base) throw InvalidArgument("corollary needs N >= " + std::to_string(base));
  return Rational(family_polynomial(family, n), family_polynomial(family, base));
}

namespace {

BoundKind lower_bound_kind(BoundKind seed) {
  return seed == BoundKind::exact || seed == BoundKind::lower ? BoundKind::lower : BoundKind::estimate;
}

}  // namespace

EnergyEstimate corollary_lower_bound(Family family, int n, const EnergyEstimate& seed) {
  const int base = chain_base(family);
  if (seed.kind() == BoundKind::upper)
    throw InvalidArgument("an upper-bound seed does not give a lower bound");
  if (seed.family() != family) throw InvalidArgument("seed belongs to another family");
  if (seed.n() != base) throw InvalidArgument("seed must be the N = " + std::to_string(base) + " energy");
  if (!(seed.value() < 0.0)) throw InvalidArgument("seed energy must be negative");
  if (n == base) return seed.relabelled(seed.kind(), "corollary");
  const auto scaled = seed.scaled(corollary_coefficient(family, n), "corollary", n);
  return {scaled.value(), lower_bound_kind(seed.kind()), "corollary", family, n};
}

EnergyEstimate levy_leblond_bound(int n, const EnergyEstimate& e2) {
  if (n < 2) throw InvalidArgument("Levy-Leblond bound needs N >= 2");
  if (!(e2.value() < 0.0)) throw InvalidArgument("two-body energy must be negative");
  const BigInt b = n;
  const auto scaled = e2.scaled(Rational(b * (b - 1) * (b - 1), 2), "levy_leblond", n);
  return {scaled.value(), lower_bound_kind(e2.kind()), "levy_leblond", e2.family(), n};
}

EnergyEstimate lieb_bound(int n, double c) {
  if (n < 1) throw InvalidArgument("N must be >= 1");
  if (!(c > 0.0)) throw InvalidArgument("Lieb constant must be > 0");
  const double nn = n;
  return {-c * nn * nn * nn * (1.0 + std::pow(nn, -4.0 / 3.0)), BoundKind::lower, "lieb", Family::coulomb_atom, n};
}

std::optional<double> lieb_crossover(double c, double e2) {
  if (!(c > 0.0)) throw InvalidArgument("Lieb constant must be > 0");
  if (!(e2 < 0.0)) throw InvalidArgument("two-body energy must be negative");
  // (corollary - lieb) / N^2; positive at N = 1, eventually negative iff c < -e2/4
  const auto g = [&](double x) { return e2 * (x - 1.0) / 4.0 + c * x + c * std::pow(x, -1.0 / 3.0); };
  if (c >= -e2 / 4.0) return std::nullopt;
  double lo = 1.0, hi = 2.0;
  while (g(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  boost::uintmax_t iterations = 200;
  const auto root = boost::math::tools::toms748_solve(g, lo, hi, boost::math::tools::eps_tolerance<double>(50),
                                                      iterations);
  return 0.5 * (root.first + root.second);
}

EnergyEstimate hall_upper_bound(int n, double b) {
  if (n < 1) throw InvalidArgument("N must be >= 1");
  if (!(b > 0.0)) throw InvalidArgument("Hall constant must be > 0");
  return {to_double(-Rational(p_coul(n)) * Rational(b)), BoundKind::upper, "hall", Family::newton_intrinsic, n};
}

std::vector<NormalizedPoint> normalized_sequence(Family family, std::span<const EnergyEstimate> estimates,
                                                 bool pair_rescale) {
  std::vector<NormalizedPoint> out;
  out.reserve(estimates.size());
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const auto& e = estimates[i];
    if (i > 0 && e.n() != estimates[i - 1].n() + 1) throw InvalidArgument("estimates must have consecutive N");
    const BigInt p = family_polynomial(family, e.n());
    if (p <= 0) throw InvalidArgument("normalizing polynomial vanishes at N = " + std::to_string(e.n()));
    NormalizedPoint pt{e.n(), e.value(), to_double(Rational(e.value()) / Rational(p)), std::nullopt, e.kind()};
    if (pair_rescale) pt.per_particle = e.value() / e.n();
    out.push_back(pt);
  }
  return out;
}

}  // namespace bosebounds
