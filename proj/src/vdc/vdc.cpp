#include "pslab/vdc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pslab/compensated.hpp"
#include "pslab/errors.hpp"

namespace pslab {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::advisory:
      return "ADVISORY";
  }
  return "?";
}

namespace {

std::vector<double> sample_points(double lo, double hi) {
  std::vector<double> xs(kHypothesisSamples);
  for (int i = 0; i < kHypothesisSamples; ++i) xs[i] = lo + (hi - lo) * i / (kHypothesisSamples - 1);
  return xs;
}

}  // namespace

bool derivative_order_matches(const PhaseFunction& f, int r, bool two_sided) {
  const double X = f.X();
  const double scale = f.F * std::pow(X, -r);
  if (!(scale > 0.0)) return false;
  for (const double x : sample_points(f.domain.lo, f.domain.hi)) {
    const double q = std::fabs(f.d(r, x)) / scale;
    if (q > kWindowHi) return false;
    if (two_sided && q < kWindowLo) return false;
  }
  return true;
}

cplx direct_phase_sum(const PhaseFunction& f, std::int64_t a, std::int64_t b) {
  if (b < a) return {0.0, 0.0};
  return blocked_sum(b - a + 1, [&](std::int64_t i) { return unit_exp(f(static_cast<double>(a + i))); });
}

// ---------------------------------------------------------------------------
// Kusmin-Landau
// ---------------------------------------------------------------------------

KusminLandauReport kusmin_landau_check(const PhaseFunction& f, std::int64_t a, std::int64_t b) {
  if (b < a) throw DomainError("empty summation interval");
  const auto xs = sample_points(static_cast<double>(a), static_cast<double>(b));
  int direction = 0;
  double prev = f.d(1, xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = f.d(1, xs[i]);
    const int dir = cur > prev ? 1 : (cur < prev ? -1 : 0);
    if (dir != 0) {
      if (direction != 0 && dir != direction) throw HypothesisViolation("f' is not monotone");
      direction = dir;
    }
    prev = cur;
  }

  const double da = f.d(1, static_cast<double>(a));
  const double db = f.d(1, static_cast<double>(b));
  if (std::floor(da) != std::floor(db) || da == std::floor(da) || db == std::floor(db))
    throw HypothesisViolation("f' meets an integer on the interval, ||f'|| is not bounded below");

  KusminLandauReport rep;
  rep.lambda = std::min(dist_nearest_int(da), dist_nearest_int(db));
  if (!(rep.lambda > 0.0)) throw HypothesisViolation("||f'|| vanishes");
  rep.bound = 1.0 / std::tan(std::numbers::pi * rep.lambda / 2.0);
  rep.abs_sum = std::abs(direct_phase_sum(f, a, b));
  rep.status = rep.abs_sum <= rep.bound * (1.0 + 1e-12) + 1e-9 ? CheckStatus::pass : CheckStatus::fail;
  return rep;
}

// ---------------------------------------------------------------------------
// l-th derivative test
// ---------------------------------------------------------------------------

double derivative_test_bound(double F, double X, int ell) {
  if (ell < 0) throw DomainError("derivative_test_bound requires ell >= 0");
  if (!(F > 0.0)) throw DomainError("derivative_test_bound requires F > 0");
  if (!(X >= 2.0)) throw DomainError("derivative_test_bound requires X >= 2");
  const double L = std::ldexp(1.0, ell);
  const double q = 4.0 * L - 2.0;
  return std::pow(F, 1.0 / q) * std::pow(X, 1.0 - (ell + 2.0) / q) + X / F;
}

DerivativeTestReport derivative_test_check(const PhaseFunction& f, std::int64_t a, std::int64_t b, int ell) {
  DerivativeTestReport rep;
  for (int r = 1; r <= ell + 2 && rep.hypotheses_ok; ++r)
    rep.hypotheses_ok = derivative_order_matches(f, r, true);
  rep.abs_sum = std::abs(direct_phase_sum(f, a, b));
  rep.bound = derivative_test_bound(f.F, f.X(), ell);
  rep.ratio = rep.abs_sum / rep.bound;
  rep.status = rep.hypotheses_ok ? CheckStatus::pass : CheckStatus::advisory;
  return rep;
}

// ---------------------------------------------------------------------------
// B-process
// ---------------------------------------------------------------------------

double solve_stationary_point(const PhaseFunction& f, double nu, double a, double b) {
  double lo = a, hi = b;
  const double glo = f.d(1, lo) - nu;
  const double ghi = f.d(1, hi) - nu;
  if (glo < 0.0 || ghi > 0.0) throw HypothesisViolation("stationary point not bracketed");
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (f.d(1, mid) - nu > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 60; ++it) {
    const double g = f.d(1, x) - nu;
    const double g1 = f.d(2, x);
    if (g1 == 0.0) break;
    const double step = g / g1;
    x = std::clamp(x - step, a, b);
    if (std::fabs(step) <= 1e-12 * std::max(1.0, std::fabs(x))) break;
  }
  return x;
}

BProcessOutput b_process(const PhaseFunction& f, std::int64_t a, std::int64_t b) {
  if (b < a) throw DomainError("empty summation interval");
  const auto xs = sample_points(static_cast<double>(a), static_cast<double>(b));
  bool all_neg = true, all_pos = true;
  for (const double x : xs) {
    const double s = f.d(2, x);
    all_neg = all_neg && s < 0.0;
    all_pos = all_pos && s > 0.0;
  }
  if (!all_neg && !all_pos) throw HypothesisViolation("f'' changes sign or vanishes");

  if (all_pos) {
    BProcessOutput out = b_process(negated(f), a, b);
    out.direct_sum = std::conj(out.direct_sum);
    out.transformed_sum = std::conj(out.transformed_sum);
    out.conjugated = true;
    return out;
  }

  BProcessOutput out;
  out.hypotheses_ok = derivative_order_matches(f, 2, true) && derivative_order_matches(f, 3, false) &&
                      derivative_order_matches(f, 4, false);

  const double ad = static_cast<double>(a), bd = static_cast<double>(b);
  const auto nu_lo = static_cast<std::int64_t>(std::ceil(f.d(1, bd)));
  const auto nu_hi = static_cast<std::int64_t>(std::floor(f.d(1, ad)));
  CompensatedComplexSum acc;
  for (std::int64_t nu = nu_lo; nu <= nu_hi; ++nu) {
    StationaryPoint sp;
    sp.nu = nu;
    sp.x = solve_stationary_point(f, static_cast<double>(nu), ad, bd);
    sp.phi = -f(sp.x) + static_cast<double>(nu) * sp.x;
    sp.amplitude = 1.0 / std::sqrt(std::fabs(f.d(2, sp.x)));
    // e(f(x_nu) - nu x_nu - 1/8) = e(-phi - 1/8)
    acc.add(sp.amplitude * unit_exp(-sp.phi - 0.125));
    out.stationary_points.push_back(sp);
  }
  out.transformed_sum = acc.value();
  out.direct_sum = direct_phase_sum(f, a, b);
  out.discrepancy = std::abs(out.direct_sum - out.transformed_sum);
  const double X = f.X();
  out.error_shape = std::log(f.F / X + 2.0) + X / std::sqrt(f.F);
  out.sqrt_x_shape = std::sqrt(X);
  out.fitted_constant = out.discrepancy / out.error_shape;
  out.status = out.hypotheses_ok ? CheckStatus::pass : CheckStatus::advisory;
  return out;
}

// ---------------------------------------------------------------------------
// k-th derivative bound and the Weyl shift
// ---------------------------------------------------------------------------

double kth_derivative_bound(double N, double lambda_k, int k, double eps) {
  if (k < 3) throw DomainError("kth_derivative_bound requires k >= 3");
  if (!(N > 0.0) || !(lambda_k > 0.0)) throw DomainError("kth_derivative_bound requires N, lambda_k > 0");
  const double kk = static_cast<double>(k) * (k - 1);
  return std::pow(N, 1.0 + eps) * (std::pow(lambda_k, 1.0 / kk) + std::pow(N, -1.0 / kk) +
                                   std::pow(N, -2.0 / kk) * std::pow(lambda_k, -2.0 / (k * kk)));
}

AProcessReport a_process_check(std::int64_t Z, std::int64_t Y, const std::vector<cplx>& b, double alpha,
                               double c, std::int64_t Q) {
  if (Z < 1 || Y < 1 || Q < 1) throw DomainError("a_process_check requires Z, Y, Q >= 1");
  if (static_cast<std::int64_t>(b.size()) != Y) throw DomainError("need one coefficient per n in (Y, 2Y]");

  AProcessReport rep;
  rep.x_param = 4.0 * static_cast<double>(Z) * static_cast<double>(Y);
  const double X = rep.x_param;

  CompensatedSum outer;
  for (std::int64_t m = Z; m <= 2 * Z; ++m) {
    CompensatedComplexSum inner;
    for (std::int64_t n = Y + 1; n <= 2 * Y; ++n) {
      const double mn = static_cast<double>(m) * static_cast<double>(n);
      inner.add(b[n - Y - 1] * unit_exp(alpha * std::pow(mn, c)));
    }
    outer.add(std::abs(inner.value()));
  }
  rep.lhs = outer.value() * outer.value();

  CompensatedSum shifted;
  for (std::int64_t q = 1; q <= Q; ++q) {
    for (std::int64_t n = Y + 1; n + q <= 2 * Y; ++n) {
      const double dn = std::pow(static_cast<double>(n + q), c) - std::pow(static_cast<double>(n), c);
      CompensatedComplexSum inner;
      for (std::int64_t m = Z; m <= 2 * Z; ++m)
        inner.add(unit_exp(alpha * std::pow(static_cast<double>(m), c) * dn));
      shifted.add(std::abs(inner.value()));
    }
  }
  const double Qd = static_cast<double>(Q);
  rep.rhs = X * X / Qd + (X / Qd) * shifted.value();
  rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
  return rep;
}

}  // namespace pslab
