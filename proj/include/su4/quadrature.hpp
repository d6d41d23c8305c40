#pragma once

#include <functional>
#include <vector>

namespace su4 {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule, n >= 1. Nodes by Newton iteration on P_n from the Chebyshev
/// initial guess; accurate to a few ulps for the sizes used here.
GaussLegendreRule gauss_legendre(int n);

/// Integral of f over [lo, hi] using the rule mapped affinely.
double integrate(const GaussLegendreRule& rule, double lo, double hi,
                 const std::function<double(double)>& f);

}  // namespace su4
