#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pslab/params.hpp"
#include "pslab/rational.hpp"

namespace pslab {

// Ordered-pair representation counts n = [p1^c] + [p2^c], 1 <= n <= N.
struct RepTable {
  Rational c;
  std::int64_t N = 0;
  std::vector<std::int64_t> counts;  // index n, size N+1
  std::vector<double> weighted;      // sum of log p1 log p2 over the same pairs

  std::int64_t R(std::int64_t n) const { return counts.at(n); }
  double Rw(std::int64_t n) const { return weighted.at(n); }
};

// Every weighted entry is accumulated over p1 ascending for its own n, so
// the table is bitwise identical for any thread count. Requires N >= 4 and
// c >= 1.
RepTable build_rep_table(const Rational& c, std::int64_t N);

struct ExceptionalReport {
  Rational c;
  std::int64_t N = 0;
  std::int64_t n0 = 4;
  std::vector<std::int64_t> exceptional;       // n in [n0, N] with R(n) = 0
  double density = 0.0;                        // |exceptional| / N
  std::map<std::int64_t, std::int64_t> dyadic_Z;  // M -> |E cap (M/2, M]|
};

ExceptionalReport exceptional_set(const RepTable& table, std::int64_t n0 = 4);
ExceptionalReport exceptional_set(const Rational& c, std::int64_t N, std::int64_t n0 = 4);

struct DensityRow {
  std::int64_t N = 0;
  std::int64_t count = 0;
  double density = 0.0;
};

struct DensityTrend {
  Rational c;
  std::vector<DensityRow> rows;
  std::optional<double> fitted_exponent;  // least squares slope of log|E| vs log N
  std::optional<double> theorem_exponent; // 1 - sigma(c) when c is in the window
  bool non_increasing = true;
};

// N_list ascending, every entry >= 1000. One table is built at max N and
// restricted, which is exact because representability of n only involves
// floors <= n.
DensityTrend density_trend(const Rational& c, const std::vector<std::int64_t>& N_list, std::int64_t n0 = 4);

// ---------------------------------------------------------------------------
// Ratio reports for the minor-arc target bounds
// ---------------------------------------------------------------------------

struct BoundRatioRow {
  std::string quantity;
  double X = 0.0;
  double x = 0.0;       // worst point of the x grid
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;   // max lhs/rhs over the x grid
};

struct BoundRatioOptions {
  std::vector<double> X_list;   // empty: just params.bigX
  int x_points = 64;            // equispaced interior points of [omega, 1 - omega]
  bool include_moment = false;  // fourth moment by quadrature at params.bigM
};

// Rows per X:
//   complete_sum     |sum_{n<=X} e(x[n^c])|     vs X^(2-c-c s+e/2) + X^(1-c)/||x||
//   prime_sum        |T(x)|                      vs X^(1-c s/2+e/4)
//   complete_h_sum   sum_h min(1/(h+1),H/h^2)|S_h|, H = X^(c-1+c s)
//                                                vs X^(2-c-c s+e/2) + X^(1-c)/||x||
//   prime_h_sum      same with Lambda weights, H = X^(c s/2)
//                                                vs X^(1-c s/2+e/6)
//   fourth_moment    int_m |T|^4                 vs X^(4-c-c s+e)   (optional)
// with S_h over X/2 < n <= X, h truncated at ceil(H X^eps).
std::vector<BoundRatioRow> bound_ratio_report(const ProblemParams& params, const BoundRatioOptions& opts = {});

}  // namespace pslab
