#include "pslab/arith.hpp"

#include <cmath>

#include "pslab/errors.hpp"

namespace pslab {

double von_mangoldt(std::int64_t n) {
  if (n < 1) throw DomainError("von_mangoldt requires n >= 1");
  if (n == 1) return 0.0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return std::log(static_cast<double>(n));
}

std::int64_t divisor_count(std::int64_t m) {
  if (m < 1) throw DomainError("divisor_count requires m >= 1");
  std::int64_t d = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    d *= e + 1;
  }
  if (m > 1) d *= 2;
  return d;
}

std::int64_t divisor_count_pow(std::int64_t m, int k) {
  if (k < 0) throw DomainError("divisor_count_pow requires k >= 0");
  const std::int64_t d = divisor_count(m);
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= d;
  return r;
}

double gamma_fn(double s) {
  if (!(s > 0.0)) throw DomainError("gamma_fn requires s > 0");
  return std::tgamma(s);
}

double centered_frac(double theta) { return theta - std::nearbyint(theta); }

double dist_nearest_int(double theta) { return std::fabs(centered_frac(theta)); }

double phase_mul(double x, std::int64_t k) {
  const double kd = static_cast<double>(k);
  const double q = std::nearbyint(x * kd);
  return centered_frac(std::fma(x, kd, -q));
}

cplx unit_exp(double theta) {
  const double r = 2.0 * std::numbers::pi * centered_frac(theta);
  return {std::cos(r), std::sin(r)};
}

double sin_pi(double t) {
  // fmod is exact; r in (-2, 2).
  double r = std::fmod(t, 2.0);
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  return std::sin(std::numbers::pi * r);
}

cplx interval_kernel(std::int64_t d, double start, double length) {
  if (d == 0) return {length, 0.0};
  // (e((start+length) d) - e(start d)) / (2 pi i d)
  //   = e(start d) (e(length d) - 1) / (2 pi i d)
  const double span = phase_mul(length, d);
  if (span == 0.0) return {0.0, 0.0};
  const cplx rot = unit_exp(span) - 1.0;
  const cplx lead = unit_exp(phase_mul(start, d));
  return lead * rot / cplx(0.0, 2.0 * std::numbers::pi * static_cast<double>(d));
}

}  // namespace pslab
