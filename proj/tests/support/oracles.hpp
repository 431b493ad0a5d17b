#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's floor, sieve or summation code.

#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

// Exact floor of n^(a/b): the largest k with k^b <= n^a, by GMP integer root
// and an explicit bracket check.
inline std::int64_t floor_pow(std::int64_t n, std::int64_t a, std::int64_t b) {
  mpz_t na, k, kb, k1b;
  mpz_inits(na, k, kb, k1b, nullptr);
  mpz_set_si(na, n);
  mpz_pow_ui(na, na, static_cast<unsigned long>(a));
  mpz_root(k, na, static_cast<unsigned long>(b));
  mpz_pow_ui(kb, k, static_cast<unsigned long>(b));
  mpz_add_ui(k1b, k, 1);
  mpz_pow_ui(k1b, k1b, static_cast<unsigned long>(b));
  const bool ok = mpz_cmp(kb, na) <= 0 && mpz_cmp(na, k1b) < 0;
  const std::int64_t out = ok ? mpz_get_si(k) : -1;
  mpz_clears(na, k, kb, k1b, nullptr);
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::int64_t> primes_upto(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= limit; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

// sum_i w_i e(theta_i) with theta_i = alpha * k_i evaluated in MPFR at `bits`.
// alpha is taken as the exact double it is.
inline std::complex<double> phase_sum(const std::vector<double>& w, const std::vector<std::int64_t>& k,
                                      double alpha, int bits = 256) {
  mpfr_t th, re, im, s, c, two_pi;
  mpfr_inits2(bits, th, re, im, s, c, two_pi, nullptr);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  mpfr_const_pi(two_pi, MPFR_RNDN);
  mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
  for (std::size_t i = 0; i < k.size(); ++i) {
    mpfr_set_d(th, alpha, MPFR_RNDN);
    mpfr_mul_si(th, th, k[i], MPFR_RNDN);
    mpfr_mul(th, th, two_pi, MPFR_RNDN);
    mpfr_sin_cos(s, c, th, MPFR_RNDN);
    mpfr_mul_d(c, c, w[i], MPFR_RNDN);
    mpfr_mul_d(s, s, w[i], MPFR_RNDN);
    mpfr_add(re, re, c, MPFR_RNDN);
    mpfr_add(im, im, s, MPFR_RNDN);
  }
  std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
  mpfr_clears(th, re, im, s, c, two_pi, nullptr);
  return out;
}

// sum_{a<=n<=b} e(alpha n^(p/q)) with the phase in MPFR at `bits`.
inline std::complex<double> smooth_sum(double alpha, std::int64_t p, std::int64_t q, std::int64_t a,
                                       std::int64_t b, int bits = 256) {
  mpfr_t x, th, re, im, s, c, two_pi;
  mpfr_inits2(bits, x, th, re, im, s, c, two_pi, nullptr);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  mpfr_const_pi(two_pi, MPFR_RNDN);
  mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
  for (std::int64_t n = a; n <= b; ++n) {
    mpfr_set_si(x, n, MPFR_RNDN);
    mpfr_pow_si(x, x, p, MPFR_RNDN);
    mpfr_rootn_ui(x, x, static_cast<unsigned long>(q), MPFR_RNDN);
    mpfr_mul_d(th, x, alpha, MPFR_RNDN);
    mpfr_mul(th, th, two_pi, MPFR_RNDN);
    mpfr_sin_cos(s, c, th, MPFR_RNDN);
    mpfr_add(re, re, c, MPFR_RNDN);
    mpfr_add(im, im, s, MPFR_RNDN);
  }
  std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
  mpfr_clears(x, th, re, im, s, c, two_pi, nullptr);
  return out;
}

// |sum_{n=1}^{N} e(theta n)| = |sin(pi N theta) / sin(pi theta)|.
inline double geometric_abs(double theta, std::int64_t N) {
  const double pi = 3.14159265358979323846;
  return std::fabs(std::sin(pi * static_cast<double>(N) * theta) / std::sin(pi * theta));
}

}  // namespace oracle
