#include "pslab/params.hpp"

#include <algorithm>
#include <cmath>

#include "pslab/errors.hpp"

namespace pslab {

SigmaVariant parse_sigma_variant(std::string_view s) {
  if (s == "theorem") return SigmaVariant::theorem;
  if (s == "conservative") return SigmaVariant::conservative;
  throw DomainError("unknown sigma variant '" + std::string(s) + "'");
}

std::string to_string(SigmaVariant v) {
  return v == SigmaVariant::theorem ? "theorem" : "conservative";
}

double sigma_branch_a(double c) { return (48.0 - 38.0 * c) / 29.0; }
double sigma_branch_b(double c) { return (16.0 - 10.0 * c) / 75.0; }

double sigma_of_c(double c, SigmaVariant variant) {
  // The closed endpoint 24/19 is admitted so that sigma(24/19) = 0 can be
  // evaluated; the first branch vanishes there.
  if (!(c > 1.0) || c > 24.0 / 19.0) throw DomainError("sigma_of_c requires 1 < c < 24/19");
  const double s = std::min(sigma_branch_a(c), sigma_branch_b(c));
  return variant == SigmaVariant::theorem ? s : s / c;
}

bool exponent_in_window(const Rational& c) {
  return less(Rational(1, 1), c) && less(c, Rational(24, 19));
}

double ProblemParams::log_x() const { return std::log(bigX); }

double ProblemParams::h_complete() const {
  const double cv = c_value();
  return std::pow(bigX, cv - 1.0 + cv * sigma);
}

double ProblemParams::h_prime() const { return std::pow(bigX, c_value() * sigma / 2.0); }

double ProblemParams::q_shift() const { return std::pow(bigX, c_value() * sigma); }

ProblemParams make_params(const Rational& c, std::int64_t N, std::int64_t M, double eps,
                          SigmaVariant variant) {
  if (!exponent_in_window(c)) throw DomainError("exponent " + c.str() + " outside (1, 24/19)");
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (N < 64) throw DomainError("N must be at least 64");
  if (M < 2 || M > N) throw DomainError("M must satisfy 2 <= M <= N");

  ProblemParams p;
  p.c = c;
  p.gamma = 1.0 / c.to_double();
  p.eps = eps;
  p.bigN = N;
  p.bigM = M;
  p.bigX = std::pow(static_cast<double>(M), p.gamma);
  p.omega = std::pow(static_cast<double>(N), -1.0 / 3.0 - eps);
  p.sigma_variant = variant;
  p.sigma = sigma_of_c(c.to_double(), variant);
  if (!(p.omega > 0.0 && p.omega < 0.5)) throw DomainError("arc width omega outside (0, 1/2)");
  return p;
}

}  // namespace pslab
