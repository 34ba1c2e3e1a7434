#include "hrec/quadrature.hpp"

#include <cmath>

#include "hrec/errors.hpp"

namespace hrec {

// Nodes as roots of the Legendre polynomial by Newton iteration, then mapped
// from [-1,1] to [0,1].
GaussRule gauss_rule(int points) {
  if (points < 1 || points > 64) throw ConfigError("gauss_rule: points must be in 1..64");
  const int q = points;
  GaussRule rule;
  rule.x.resize(q);
  rule.w.resize(q);
  for (int k = 0; k < (q + 1) / 2; ++k) {
    double t = std::cos(M_PI * (k + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= q; ++j) {
        const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - t * t) * dp * dp);
    rule.x[k] = (1.0 - t) / 2.0; // roots come out descending in t
    rule.w[k] = w / 2.0;
    rule.x[q - 1 - k] = (1.0 + t) / 2.0;
    rule.w[q - 1 - k] = w / 2.0;
  }
  return rule;
}

} // namespace hrec
