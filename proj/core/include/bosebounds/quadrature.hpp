#pragma once

#include <vector>

namespace bosebounds {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n);

/// Gauss-Laguerre rule for the weight x^a e^{-x} on [0, inf) (Golub-Welsch).
QuadratureRule gauss_laguerre(int n, double a = 0.0);

/// Node of the two-particle radial domain r12 in [|r1 - r2|, r1 + r2].
struct SimplexNode {
  double r1;
  double r2;
  double r12;
  double weight;
};

/// Product rule for
///   int f(r1, r2, r12) exp(-2 alpha (r1 + r2)) r1 r2 r12 dr1 dr2 dr12
/// built in coordinates s = r1 + r2, x = r12/s, y = (r1 - r2)/r12. The weights
/// include the exponential and the volume element, so the rule is exact
/// whenever f r1 r2 r12 is a polynomial of degree <= 2 order_s - 3 (in s) and
/// <= 2 order_inner - 2 (in x and y).
std::vector<SimplexNode> simplex_quadrature(int order_s, int order_inner, double alpha = 1.0);

}  // namespace bosebounds
