#include "pslab/phase.hpp"

#include <algorithm>
#include <cmath>

namespace pslab {

PhaseFunction power_phase(double alpha, double c, double X, int k) {
  PhaseFunction f;
  f.eval = [alpha, c](double x) { return alpha * std::pow(x, c); };
  f.deriv = [alpha, c](int r, double x) {
    double coef = alpha;
    for (int i = 0; i < r; ++i) coef *= c - i;
    return coef * std::pow(x, c - r);
  };
  f.F = std::fabs(alpha) * std::pow(X, c);
  f.k = k;
  f.lambda_k = std::fabs(f.deriv(k, X));
  f.domain = {X / 2.0, X};
  return f;
}

PhaseFunction linear_phase(double alpha, Interval domain, double beta) {
  PhaseFunction f;
  f.eval = [alpha, beta](double x) { return alpha * x + beta; };
  f.deriv = [alpha, beta](int r, double x) {
    if (r == 0) return alpha * x + beta;
    return r == 1 ? alpha : 0.0;
  };
  f.F = std::fabs(alpha) * domain.hi;
  f.k = 5;
  f.lambda_k = 0.0;
  f.domain = domain;
  return f;
}

PhaseFunction negated(const PhaseFunction& g) {
  PhaseFunction f = g;
  f.eval = [e = g.eval](double x) { return -e(x); };
  f.deriv = [d = g.deriv](int r, double x) { return -d(r, x); };
  return f;
}

double derivative_consistency(const PhaseFunction& f, int max_order, int samples) {
  double worst = 0.0;
  const double lo = f.domain.lo;
  const double hi = f.domain.hi;
  for (int s = 1; s <= samples; ++s) {
    const double x = lo + (hi - lo) * s / (samples + 1);
    const double h = 1e-3 * std::max(std::fabs(x), 1.0);
    for (int r = 1; r <= max_order; ++r) {
      auto g = [&](double t) { return f.d(r - 1, t); };
      // five-point central difference
      const double fd = (-g(x + 2 * h) + 8 * g(x + h) - 8 * g(x - h) + g(x - 2 * h)) / (12 * h);
      const double an = f.d(r, x);
      const double scale = std::max(std::fabs(an), std::fabs(fd));
      // Both vanish (e.g. second derivative of a linear phase).
      if (scale <= 1e-12 * (std::fabs(g(x)) / std::max(std::fabs(x), 1.0) + 1e-300)) continue;
      worst = std::max(worst, std::fabs(an - fd) / scale);
    }
  }
  return worst;
}

}  // namespace pslab
