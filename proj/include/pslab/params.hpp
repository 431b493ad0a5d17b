#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pslab/rational.hpp"

namespace pslab {

// theorem:      sigma = min((48-38c)/29, (16-10c)/75)
// conservative: the same divided by c, as the minor-arc argument uses it.
enum class SigmaVariant { theorem, conservative };

SigmaVariant parse_sigma_variant(std::string_view s);
std::string to_string(SigmaVariant v);

// Throws DomainError outside the open window 1 < c < 24/19.
double sigma_of_c(double c, SigmaVariant variant);

// The two branches of sigma before the min is taken.
double sigma_branch_a(double c);  // (48-38c)/29
double sigma_branch_b(double c);  // (16-10c)/75

// True iff 1 < c < 24/19 exactly.
bool exponent_in_window(const Rational& c);

struct ProblemParams {
  Rational c;
  double gamma = 0.0;  // 1/c
  double eps = 0.01;
  std::int64_t bigN = 0;
  std::int64_t bigM = 0;  // dyadic block end, M <= N
  double bigX = 0.0;      // M^gamma, the prime cutoff
  double omega = 0.0;     // N^(-1/3 - eps)
  double sigma = 0.0;
  SigmaVariant sigma_variant = SigmaVariant::theorem;

  double c_value() const { return c.to_double(); }
  double log_x() const;

  // Cutoffs of the minor-arc argument, all functions of X.
  double h_complete() const;  // X^(c-1+c sigma)
  double h_prime() const;     // X^(c sigma / 2)
  double q_shift() const;     // X^(c sigma)
};

// Validates 1 < c < 24/19, eps > 0, 64 <= N, 2 <= M <= N and the arc width;
// throws DomainError naming the failed condition.
ProblemParams make_params(const Rational& c, std::int64_t N, std::int64_t M, double eps = 0.01,
                          SigmaVariant variant = SigmaVariant::theorem);

}  // namespace pslab
