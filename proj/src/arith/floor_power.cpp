#include "pslab/floor_power.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <string>

#include "pslab/errors.hpp"
#include "pslab/primes.hpp"

namespace pslab {

namespace {

// RAII holders for the handful of GMP/MPFR temporaries used per call.
struct Mpz {
  mpz_t v;
  Mpz() { mpz_init(v); }
  ~Mpz() { mpz_clear(v); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
};

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(int prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

std::int64_t to_i64(const mpz_t z) {
  if (!mpz_fits_slong_p(z)) throw CertificationError("floor power exceeds 64-bit range");
  return mpz_get_si(z);
}

}  // namespace

FloorPower floor_pow(std::int64_t n, const Rational& c, const FloorPowOptions& opts) {
  if (n < 1) throw DomainError("floor_pow requires n >= 1");
  if (c.num <= 0) throw DomainError("floor_pow requires c > 0");

  FloorPower out;
  out.n = n;
  out.c = c;

  const auto a = static_cast<unsigned long>(c.num);
  const auto b = static_cast<unsigned long>(c.den);

  Mpz base, power, root;
  mpz_set_si(base.v, n);
  mpz_pow_ui(power.v, base.v, a);  // n^a, exact

  // n^(a/b) is an integer iff n is a perfect b-th power.
  if (mpz_root(root.v, base.v, b) != 0) {
    mpz_pow_ui(root.v, root.v, a);
    out.value = to_i64(root.v);
    out.certified = true;
    out.precision_bits = 0;
    return out;
  }

  for (const int prec : opts.ladder) {
    Mpfr lo(prec), hi(prec);
    // Round n^a outward, then take the b-th root outward: lo <= n^c <= hi.
    mpfr_set_z(lo.v, power.v, MPFR_RNDD);
    mpfr_set_z(hi.v, power.v, MPFR_RNDU);
    mpfr_rootn_ui(lo.v, lo.v, b, MPFR_RNDD);
    mpfr_rootn_ui(hi.v, hi.v, b, MPFR_RNDU);
    mpfr_floor(lo.v, lo.v);
    mpfr_floor(hi.v, hi.v);
    if (mpfr_equal_p(lo.v, hi.v)) {
      Mpz fl;
      mpfr_get_z(fl.v, lo.v, MPFR_RNDN);
      out.value = to_i64(fl.v);
      out.certified = true;
      out.precision_bits = prec;
      return out;
    }
  }
  throw CertificationError("floor of " + std::to_string(n) + "^(" + c.str() +
                           ") not certified at maximum precision");
}

std::vector<std::int64_t> floor_pow_range(std::int64_t lo, std::int64_t hi, const Rational& c) {
  if (hi < lo) return {};
  std::vector<std::int64_t> out(hi - lo + 1);
  const std::int64_t count = hi - lo + 1;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[i] = floor_pow(lo + i, c).value;
  return out;
}

double PrimeFloorTable::weight_sum() const {
  double s = 0.0;
  for (const auto w : weights) s += w;
  return s;
}

PrimeFloorTable prime_floor_table(const Rational& c, std::int64_t max_value) {
  PrimeFloorTable t;
  t.c = c;
  t.max_value = max_value;
  if (max_value < 2) return t;
  // [p^c] <= M implies p <= M^(1/c) <= M for c >= 1; the sieve limit gets a
  // margin and the exact floor decides membership.
  const double cv = c.to_double();
  const auto limit = std::min<std::int64_t>(
      max_value, static_cast<std::int64_t>(std::pow(static_cast<double>(max_value), 1.0 / cv)) + 2);
  const auto table = sieve_primes(limit);
  const auto& ps = table.primes;
  std::vector<std::int64_t> floors(ps.size());
  const auto np = static_cast<std::int64_t>(ps.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < np; ++i) floors[i] = floor_pow(ps[i], c).value;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (floors[i] > max_value) break;
    t.primes.push_back(ps[i]);
    t.floors.push_back(floors[i]);
    t.weights.push_back(std::log(static_cast<double>(ps[i])));
  }
  return t;
}

}  // namespace pslab
