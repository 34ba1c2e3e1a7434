#pragma once

#include <vector>

namespace hrec {

/// Gauss-Legendre rule mapped to [0,1]; exact for polynomials of degree 2q-1.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

GaussRule gauss_rule(int points);

} // namespace hrec
