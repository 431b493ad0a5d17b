#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

namespace pslab {

using cplx = std::complex<double>;

// Lambda(n): log p when n = p^k, else 0.
double von_mangoldt(std::int64_t n);

// d(m), number of divisors, by trial division.
std::int64_t divisor_count(std::int64_t m);

// d(m)^k.
std::int64_t divisor_count_pow(std::int64_t m, int k);

// Gamma(s) for s > 0, DomainError otherwise.
double gamma_fn(double s);

// ||theta||, distance to the nearest integer, in [0, 1/2].
double dist_nearest_int(double theta);

// theta - round(theta), in [-1/2, 1/2].
double centered_frac(double theta);

// x*k reduced mod 1 with a single rounding (fma keeps the product exact
// before the integer part is removed).
double phase_mul(double x, std::int64_t k);

// e(theta) = exp(2 pi i theta), argument reduced mod 1 first.
cplx unit_exp(double theta);

// sin(pi t) with exact reduction of t mod 2, so integer t gives 0 exactly.
double sin_pi(double t);

// integral_{start}^{start+length} e(x d) dx in closed form. When length*d is
// an integer the value is exactly 0 for d != 0.
cplx interval_kernel(std::int64_t d, double start, double length);

}  // namespace pslab
