#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pslab/arith.hpp"
#include "pslab/phase.hpp"

namespace pslab {

enum class CheckStatus { pass, fail, advisory };
std::string to_string(CheckStatus s);

// Sampling of the asymptotic hypotheses: 64 equispaced points on the domain,
// implied-constant window [1/8, 8].
inline constexpr int kHypothesisSamples = 64;
inline constexpr double kWindowLo = 1.0 / 8.0;
inline constexpr double kWindowHi = 8.0;

// True iff |f^(r)(x)| / (F X^-r) lies in the window at every sample point
// (two-sided) or below kWindowHi (one-sided).
bool derivative_order_matches(const PhaseFunction& f, int r, bool two_sided);

// Direct sum_{a <= n <= b} e(f(n)).
cplx direct_phase_sum(const PhaseFunction& f, std::int64_t a, std::int64_t b);

// ---------------------------------------------------------------------------

struct KusminLandauReport {
  double abs_sum = 0.0;
  double lambda = 0.0;  // min ||f'|| on [a, b]
  double bound = 0.0;   // cot(pi lambda / 2)
  CheckStatus status = CheckStatus::pass;
};

// Throws HypothesisViolation when f' is not monotone on the samples or
// ||f'|| vanishes (f' meets an integer) on [a, b].
KusminLandauReport kusmin_landau_check(const PhaseFunction& f, std::int64_t a, std::int64_t b);

// F^(1/(4L-2)) X^(1-(ell+2)/(4L-2)) + X/F with L = 2^ell.
double derivative_test_bound(double F, double X, int ell);

struct DerivativeTestReport {
  double abs_sum = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool hypotheses_ok = true;
  CheckStatus status = CheckStatus::pass;  // advisory when sampling fails
};

DerivativeTestReport derivative_test_check(const PhaseFunction& f, std::int64_t a, std::int64_t b, int ell);

// ---------------------------------------------------------------------------

struct StationaryPoint {
  std::int64_t nu = 0;
  double x = 0.0;         // f'(x) = nu
  double phi = 0.0;       // -f(x) + nu x
  double amplitude = 0.0; // |f''(x)|^(-1/2)
};

struct BProcessOutput {
  cplx direct_sum{0.0, 0.0};
  cplx transformed_sum{0.0, 0.0};
  std::vector<StationaryPoint> stationary_points;
  double discrepancy = 0.0;     // |direct - transformed|
  double error_shape = 0.0;     // log(F/X + 2) + X F^(-1/2)
  double sqrt_x_shape = 0.0;    // X^(1/2), valid when F >= X
  double fitted_constant = 0.0; // discrepancy / error_shape
  bool conjugated = false;      // applied to -f because f'' > 0
  bool hypotheses_ok = true;
  CheckStatus status = CheckStatus::pass;
};

// x with f'(x) = nu on [a, b], f' decreasing: bisection to width 1e-6 then
// Newton polish. Throws HypothesisViolation if nu is not bracketed.
double solve_stationary_point(const PhaseFunction& f, double nu, double a, double b);

// Stationary-phase transform of sum_{a<=n<=b} e(f(n)). Requires f'' of one
// sign on the samples; for f'' > 0 the transform of -f is conjugated.
BProcessOutput b_process(const PhaseFunction& f, std::int64_t a, std::int64_t b);

// ---------------------------------------------------------------------------

// N^(1+eps) (lambda^(1/(k(k-1))) + N^(-1/(k(k-1))) + N^(-2/(k(k-1))) lambda^(-2/(k^2(k-1)))).
double kth_derivative_bound(double N, double lambda_k, int k, double eps);

struct AProcessReport {
  double lhs = 0.0;        // |sum_m |sum_n b_n e(alpha (mn)^c)||^2
  double rhs = 0.0;        // X^2/Q + (X/Q) sum_q sum_n |sum_m e(...)|
  double x_param = 0.0;    // X = 4 Z Y
  double ratio = 0.0;
};

// Outer m in [Z, 2Z], inner n in (Y, 2Y] with coefficients b[n - Y - 1],
// X = 4ZY so that mn <= X always holds. The differenced inner sum runs over
// m in [Z, 2Z] and n, n+q both in (Y, 2Y].
AProcessReport a_process_check(std::int64_t Z, std::int64_t Y, const std::vector<cplx>& b, double alpha,
                               double c, std::int64_t Q);

}  // namespace pslab
