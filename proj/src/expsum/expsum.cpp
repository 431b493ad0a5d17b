#include "pslab/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pslab/compensated.hpp"
#include "pslab/errors.hpp"
#include "pslab/primes.hpp"

namespace pslab {

double summation_error_bound(std::int64_t terms, double max_coeff) {
  constexpr double kSafety = 8.0;
  return static_cast<double>(terms) * std::numeric_limits<double>::epsilon() * max_coeff * kSafety;
}

// ---------------------------------------------------------------------------
// CoefficientSeq
// ---------------------------------------------------------------------------

CoefficientSeq CoefficientSeq::constant_one(std::int64_t lo, std::int64_t hi) {
  return CoefficientSeq(Kind::constant_one, lo, hi, 1.0);
}

CoefficientSeq CoefficientSeq::von_mangoldt(std::int64_t lo, std::int64_t hi) {
  CoefficientSeq s(Kind::von_mangoldt, lo, hi, std::log(static_cast<double>(std::max<std::int64_t>(hi, 2))));
  s.weights_.assign(std::max<std::int64_t>(hi - lo + 1, 0), 0.0);
  const auto flags = prime_flags(hi);
  for (std::int64_t p = 2; p <= hi; ++p) {
    if (!flags[p]) continue;
    const double lp = std::log(static_cast<double>(p));
    for (std::int64_t q = p; q <= hi; q *= p) {
      if (q >= lo) s.weights_[q - lo] = lp;
      if (q > hi / p) break;
    }
  }
  return s;
}

CoefficientSeq CoefficientSeq::log_prime(std::int64_t lo, std::int64_t hi) {
  CoefficientSeq s(Kind::log_prime, lo, hi, std::log(static_cast<double>(std::max<std::int64_t>(hi, 2))));
  s.weights_.assign(std::max<std::int64_t>(hi - lo + 1, 0), 0.0);
  const auto flags = prime_flags(hi);
  for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n)
    if (flags[n]) s.weights_[n - lo] = std::log(static_cast<double>(n));
  return s;
}

CoefficientSeq CoefficientSeq::from_values(std::int64_t lo, std::vector<cplx> values, double bound) {
  for (const auto& v : values)
    if (std::abs(v) > bound * (1.0 + 1e-12))
      throw DomainError("coefficient exceeds its declared bound");
  CoefficientSeq s(Kind::explicit_values, lo, lo + static_cast<std::int64_t>(values.size()) - 1, bound);
  s.values_ = std::move(values);
  return s;
}

cplx CoefficientSeq::operator()(std::int64_t n) const {
  if (n < lo_ || n > hi_) return {0.0, 0.0};
  switch (kind_) {
    case Kind::constant_one:
      return {1.0, 0.0};
    case Kind::explicit_values:
      return values_[n - lo_];
    case Kind::von_mangoldt:
    case Kind::log_prime:
      return {weights_[n - lo_], 0.0};
  }
  return {0.0, 0.0};
}

std::vector<cplx> CoefficientSeq::materialize() const {
  std::vector<cplx> out;
  out.reserve(std::max<std::int64_t>(hi_ - lo_ + 1, 0));
  for (std::int64_t n = lo_; n <= hi_; ++n) out.push_back((*this)(n));
  return out;
}

// ---------------------------------------------------------------------------
// Sums with floor phases
// ---------------------------------------------------------------------------

ExpSumResult t_sum(const PrimeFloorTable& table, double x) {
  ExpSumResult r;
  const auto n = static_cast<std::int64_t>(table.size());
  r.value = blocked_sum(n, [&](std::int64_t i) {
    return table.weights[i] * unit_exp(phase_mul(x, table.floors[i]));
  });
  r.terms = n;
  r.sum_error = summation_error_bound(n, n ? table.weights.back() : 0.0);
  return r;
}

ExpSumResult t_sum(const ProblemParams& params, double x) {
  return t_sum(prime_floor_table(params.c, params.bigM), x);
}

ExpSumResult w_sum(const CoefficientSeq& coeffs, const std::vector<std::int64_t>& floors, double x) {
  ExpSumResult r;
  const std::int64_t count = coeffs.hi() - coeffs.lo() + 1;
  if (count <= 0) return r;
  if (static_cast<std::int64_t>(floors.size()) < count)
    throw DomainError("floor table shorter than the coefficient range");
  const auto a = coeffs.materialize();
  r.value = blocked_sum(count, [&](std::int64_t i) { return a[i] * unit_exp(phase_mul(x, floors[i])); });
  r.terms = count;
  r.sum_error = summation_error_bound(count, coeffs.bound());
  return r;
}

ExpSumResult w_sum(const CoefficientSeq& coeffs, const Rational& c, double x) {
  if (coeffs.hi() < coeffs.lo()) return {};
  return w_sum(coeffs, floor_pow_range(coeffs.lo(), coeffs.hi(), c), x);
}

// ---------------------------------------------------------------------------
// Sums with smooth phases
// ---------------------------------------------------------------------------

namespace {

double smooth_phase(double alpha, double n, double c) {
  const double y = std::pow(n, c);
  const double q = std::nearbyint(alpha * y);
  return centered_frac(std::fma(alpha, y, -q));
}

}  // namespace

ExpSumResult smooth_sum(double /*X*/, double alpha, const Rational& c, std::int64_t a, std::int64_t b) {
  ExpSumResult r;
  if (b < a) return r;
  if (a < 1) throw DomainError("smooth_sum requires a >= 1");
  const double cv = c.to_double();
  const std::int64_t count = b - a + 1;
  r.value = blocked_sum(count, [&](std::int64_t i) {
    return unit_exp(smooth_phase(alpha, static_cast<double>(a + i), cv));
  });
  r.terms = count;
  r.sum_error = summation_error_bound(count, 1.0);
  return r;
}

ExpSumResult weighted_smooth_sum(const CoefficientSeq& coeffs, double alpha, const Rational& c) {
  ExpSumResult r;
  const std::int64_t count = coeffs.hi() - coeffs.lo() + 1;
  if (count <= 0) return r;
  const double cv = c.to_double();
  const auto a = coeffs.materialize();
  r.value = blocked_sum(count, [&](std::int64_t i) {
    return a[i] * unit_exp(smooth_phase(alpha, static_cast<double>(coeffs.lo() + i), cv));
  });
  r.terms = count;
  r.sum_error = summation_error_bound(count, coeffs.bound());
  return r;
}

// ---------------------------------------------------------------------------
// Majorant
// ---------------------------------------------------------------------------

std::int64_t default_h_max(double H, double X, double eps) {
  return static_cast<std::int64_t>(std::ceil(H * std::pow(X, eps)));
}

MajorantReport floor_sum_majorant(const CoefficientSeq& coeffs, const Rational& c, double x, double H,
                             std::int64_t h_max) {
  const double X = static_cast<double>(coeffs.hi());
  if (!(H >= 2.0 && H <= X)) throw DomainError("majorant requires 2 <= H <= X");
  if (static_cast<double>(h_max) < H) throw DomainError("majorant requires h_max >= H");

  MajorantReport rep;
  rep.h_max = h_max;
  const double L = std::log(X);

  rep.abs_w = std::abs(w_sum(coeffs, c, x).value);
  rep.first_part = X * L / H;

  auto second = [&](double g) {
    CompensatedSum acc;
    const auto hmax = static_cast<std::int64_t>(std::floor(H));
    for (std::int64_t h = 0; h <= hmax; ++h) {
      const double weight = h == 0 ? 1.0 : 1.0 / static_cast<double>(h);
      acc.add(weight * std::abs(weighted_smooth_sum(coeffs, static_cast<double>(h) + g, c).value));
    }
    return acc.value();
  };
  rep.second_part_plus = second(x);
  rep.second_part_minus = second(-x);
  rep.second_part = std::max(rep.second_part_plus, rep.second_part_minus);

  CompensatedSum third;
  const auto ones_hi = coeffs.hi();
  for (std::int64_t h = 1; h <= h_max; ++h) {
    const double hd = static_cast<double>(h);
    const double weight = std::min(1.0 / hd, H / (hd * hd));
    third.add(weight * std::abs(smooth_sum(X, hd, c, 1, ones_hi).value));
  }
  rep.third_part = third.value();
  rep.tail_bound = H * X / static_cast<double>(h_max);
  rep.truncation_warning = rep.tail_bound > 0.01 * rep.third_part;
  return rep;
}

}  // namespace pslab
