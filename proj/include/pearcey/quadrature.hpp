#pragma once

#include <vector>

namespace pearcey {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

// Gauss-Legendre rule with n points; tables are cached per n.
const GaussRule& gauss_legendre(int n);

// Rule mapped to [a, b].
GaussRule gauss_legendre(int n, double a, double b);

}  // namespace pearcey
