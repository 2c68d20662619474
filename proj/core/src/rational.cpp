#include "bosebounds/rational.hpp"

#include "bosebounds/errors.hpp"

namespace bosebounds {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BondWeights::BondWeights(int n) : n_(n) {
  if (n < 2) throw InvalidArgument("bond weights need at least two vertices");
  w_.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
}

std::size_t BondWeights::index(int k, int l) const {
  if (k > l) std::swap(k, l);
  if (k < 0 || l >= n_ || k == l) throw InvalidArgument("bond index out of range");
  // row-major over the strict upper triangle
  return static_cast<std::size_t>(k) * (2 * n_ - k - 1) / 2 + (l - k - 1);
}

Rational& BondWeights::at(int k, int l) { return w_[index(k, l)]; }
const Rational& BondWeights::at(int k, int l) const { return w_[index(k, l)]; }

GraphIdentity graph_identity_check(const BondWeights& b) {
  const int n = b.n();
  if (n < 3) throw InvalidArgument("graph identity needs N >= 3");
  GraphIdentity out;
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) out.total += b.at(k, l);

  Rational sum_subgraphs;
  for (int removed = 0; removed < n; ++removed)
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l)
        if (k != removed && l != removed) sum_subgraphs += b.at(k, l);
  out.subgraph_total = sum_subgraphs / Rational(n - 2);
  return out;
}

}  // namespace bosebounds
