#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pslab/arith.hpp"

namespace pslab {

struct HBParams {
  double u = 1.0;
  double z = 1.0;
  double v = 1.0;
  double X = 1.0;
};

struct HBConstraint {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

struct HBParamReport {
  HBParams params;
  std::vector<HBConstraint> constraints;  // u>=1, u^2<=z, 128uz^2<=X, 2^20 X<=v^3
  bool all_hold() const;
  std::string failures() const;
};

// Checks the four size constraints. 128 u z^2 <= X is compared with a
// relative slack of 1e-12 because the default choice makes it an equality.
HBParamReport check_params(const HBParams& p);

// u = X^(1/5)/128, z = X^(2/5), v = 128 X^(1/3).
HBParamReport default_params(double X);

// Throws ConstraintViolation listing every failing inequality.
void validate(const HBParams& p);

// Dense real coefficients on [lo, lo + values.size() - 1].
struct CoeffArray {
  std::int64_t lo = 1;
  std::vector<double> values;
  std::int64_t hi() const { return lo + static_cast<std::int64_t>(values.size()) - 1; }
  double at(std::int64_t n) const { return n < lo || n > hi() ? 0.0 : values[n - lo]; }
};

enum class TermKind { type_i, type_ii };
std::string to_string(TermKind k);

// One component sum  scalar * sum_m a_m sum_n w_n G(mn),  mn <= X.
//  type_i:  w_n = (log n)^h on n >= inner_lo (inner_lo = ceil z)
//  type_ii: w_n = b_n on [inner.lo, inner.hi()], inside [u, v] when classified
struct DecompTerm {
  TermKind kind = TermKind::type_ii;
  CoeffArray outer;
  CoeffArray inner;          // type_ii only
  int log_power = 0;         // type_i only, h in {0, 1}
  std::int64_t inner_lo = 1; // type_i only
  double scalar_coeff = 1.0;
  std::int64_t x_limit = 1;
  int identity_order = 1;    // number of Moebius factors in the source term
  bool classified = true;    // false: no subproduct fits [u, v]
};

struct DecompStats {
  std::int64_t type_i = 0;
  std::int64_t type_ii = 0;
  std::int64_t unclassified = 0;
};

struct Decomposition {
  std::int64_t X = 0;
  HBParamReport report;
  std::vector<DecompTerm> terms;
  DecompStats stats;
  bool advisory = false;  // constraints fail or some term is unclassified
  double self_test_max_error = 0.0;
};

struct DecomposeOptions {
  int self_test_count = 16;
  std::uint64_t seed = 0x5eed;
};

// Exact decomposition of sum_{n<=X} Lambda(n) G(n) into type I and type II
// sums, valid for every G. Runs the recombination check on
// opts.self_test_count random G (|G| <= 1) before returning and throws
// SelfTestFailure if any disagrees by more than 1e-9 psi(X).
Decomposition decompose(std::int64_t X, const HBParams& params, const DecomposeOptions& opts = {});

// Term counts of the same construction without materializing coefficients.
// Planned terms are counted, so this can exceed decompose(), which drops
// terms whose coefficient arrays vanish.
DecompStats count_terms(std::int64_t X, const HBParams& params);

// g[n] = G(n) for 0 <= n <= X (g[0] unused).
cplx eval_term(const DecompTerm& term, std::span<const cplx> g);
cplx recombine(const Decomposition& d, std::span<const cplx> g);
cplx direct_lambda_sum(std::int64_t X, std::span<const cplx> g);

// psi(X) = sum_{n<=X} Lambda(n).
double chebyshev_psi(std::int64_t X);

// Checks |a_m| <= d(m)^5 and |b_n| <= d(n)^5 over every stored index.
bool coefficient_bounds_hold(const Decomposition& d);

}  // namespace pslab
