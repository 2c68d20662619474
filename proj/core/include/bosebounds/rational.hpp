#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bosebounds {

/// Arbitrary-precision rational; all exact identities go through this type.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Weights on the bonds of the complete graph on N vertices (0-based labels).
class BondWeights {
public:
  explicit BondWeights(int n);

  int n() const { return n_; }
  Rational& at(int k, int l);
  const Rational& at(int k, int l) const;

private:
  std::size_t index(int k, int l) const;

  int n_;
  std::vector<Rational> w_;
};

struct GraphIdentity {
  Rational total;           ///< sum over all bonds
  Rational subgraph_total;  ///< (N-2)^-1 * sum over vertices n of the bond sum of K_N minus n
  bool holds() const { return total == subgraph_total; }
};

/// Complete-graph bond identity in exact arithmetic. Requires N >= 3.
GraphIdentity graph_identity_check(const BondWeights& b);

}  // namespace bosebounds
