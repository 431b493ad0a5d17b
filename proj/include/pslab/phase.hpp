#pragma once

#include <functional>

namespace pslab {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// A real phase f with derivative oracles up to order 5 on a domain
// [X/2, X]. F is the magnitude parameter (|f^(r)| ~ F X^-r), lambda_k the
// order-k derivative magnitude used by the k-th derivative test.
struct PhaseFunction {
  std::function<double(double)> eval;
  std::function<double(int, double)> deriv;  // (order r in 0..5, x)
  double F = 0.0;
  int k = 5;
  double lambda_k = 0.0;
  Interval domain;

  double X() const { return domain.hi; }
  double operator()(double x) const { return eval(x); }
  double d(int r, double x) const { return deriv(r, x); }
};

// f(x) = alpha x^c on [X/2, X]; F = |alpha| X^c, lambda_k = |f^(k)(X)|.
PhaseFunction power_phase(double alpha, double c, double X, int k = 5);

// f(x) = alpha x + beta on [lo, hi]; F = |alpha| hi.
PhaseFunction linear_phase(double alpha, Interval domain, double beta = 0.0);

// -f, with every derivative negated.
PhaseFunction negated(const PhaseFunction& f);

// Largest relative disagreement between the analytic derivatives of order
// 1..max_order and central finite differences of the previous order, over
// `samples` interior points.
double derivative_consistency(const PhaseFunction& f, int max_order, int samples = 16);

}  // namespace pslab
