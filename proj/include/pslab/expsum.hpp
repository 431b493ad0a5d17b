#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pslab/arith.hpp"
#include "pslab/floor_power.hpp"
#include "pslab/params.hpp"
#include "pslab/rational.hpp"

namespace pslab {

struct ExpSumResult {
  cplx value{0.0, 0.0};
  std::int64_t terms = 0;
  double sum_error = 0.0;  // bound on accumulated rounding
};

// Bound on the rounding error of a compensated sum of `terms` unit-circle
// multiples of coefficients bounded by max_coeff. Each term carries a few ulp
// from the phase reduction and sin/cos.
double summation_error_bound(std::int64_t terms, double max_coeff);

// Coefficients a_n on an integer range [lo, hi], either an explicit table or
// one of the named generators.
class CoefficientSeq {
 public:
  enum class Kind { explicit_values, constant_one, von_mangoldt, log_prime };

  static CoefficientSeq constant_one(std::int64_t lo, std::int64_t hi);
  static CoefficientSeq von_mangoldt(std::int64_t lo, std::int64_t hi);
  // log n when n is prime, else 0.
  static CoefficientSeq log_prime(std::int64_t lo, std::int64_t hi);
  // values[i] is a_{lo+i}. The declared bound must dominate every |a_n|.
  static CoefficientSeq from_values(std::int64_t lo, std::vector<cplx> values, double bound);

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  Kind kind() const { return kind_; }
  double bound() const { return bound_; }
  cplx operator()(std::int64_t n) const;
  // All values as a table, index 0 = lo.
  std::vector<cplx> materialize() const;

 private:
  CoefficientSeq(Kind kind, std::int64_t lo, std::int64_t hi, double bound)
      : kind_(kind), lo_(lo), hi_(hi), bound_(bound) {}

  Kind kind_;
  std::int64_t lo_;
  std::int64_t hi_;
  double bound_;
  std::vector<cplx> values_;
  std::vector<double> weights_;  // cached Lambda / log-prime weights
};

// T(x) = sum_{p <= M^gamma} log p e(x [p^c]).
ExpSumResult t_sum(const PrimeFloorTable& table, double x);
ExpSumResult t_sum(const ProblemParams& params, double x);

// W(X, x) = sum_{lo <= n <= hi} a_n e(x [n^c]).
ExpSumResult w_sum(const CoefficientSeq& coeffs, const Rational& c, double x);
// Same with the floors supplied, floors[i] = [(lo+i)^c].
ExpSumResult w_sum(const CoefficientSeq& coeffs, const std::vector<std::int64_t>& floors, double x);

// sum_{a <= n <= b} e(alpha n^c) with smooth (unfloored) phase. X only
// documents the dyadic block [X/2, X] the interval is meant to lie in.
ExpSumResult smooth_sum(double X, double alpha, const Rational& c, std::int64_t a, std::int64_t b);

// sum_{lo <= n <= hi} a_n e(alpha n^c) for explicit coefficients.
ExpSumResult weighted_smooth_sum(const CoefficientSeq& coeffs, double alpha, const Rational& c);

// The three-part majorant for sums with floor phases together with |W|.
struct MajorantReport {
  double abs_w = 0.0;
  double first_part = 0.0;   // X L / H
  double second_part = 0.0;  // max over gamma in {x, -x}
  double second_part_plus = 0.0;
  double second_part_minus = 0.0;
  double third_part = 0.0;   // truncated at h_max
  double tail_bound = 0.0;   // H X / h_max
  std::int64_t h_max = 0;
  bool truncation_warning = false;  // tail_bound > 1% of third_part
  double majorant() const { return first_part + second_part + third_part; }
  double ratio() const { return majorant() > 0.0 ? abs_w / majorant() : 0.0; }
};

// Truncation point ceil(H X^eps) for the third series.
std::int64_t default_h_max(double H, double X, double eps);

// Requires 2 <= H <= X (X = coeffs.hi()) and h_max >= H; DomainError
// otherwise. The h = 0 weight in the second part is 1.
MajorantReport floor_sum_majorant(const CoefficientSeq& coeffs, const Rational& c, double x, double H,
                             std::int64_t h_max);

}  // namespace pslab
