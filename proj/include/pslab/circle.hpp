#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pslab/arith.hpp"
#include "pslab/expsum.hpp"
#include "pslab/floor_power.hpp"
#include "pslab/params.hpp"
#include "pslab/phase.hpp"

namespace pslab {

struct RepTable;

// Single major arc [-omega, omega]; minor arc [omega, 1 - omega].
struct ArcDecomposition {
  double omega = 0.0;
  Interval major;
  Interval minor;
  double major_length() const { return 2.0 * omega; }
  double minor_length() const { return 1.0 - 2.0 * omega; }
};

ArcDecomposition arcs(const ProblemParams& params);

enum class QuadratureRule { midpoint, trapezoid };

// `panels` equal panels of [a, b]. Midpoint nodes sit at panel centres,
// trapezoid nodes at panel ends.
struct QuadratureGrid {
  double a = 0.0;
  double b = 1.0;
  std::int64_t panels = 1;
  QuadratureRule rule = QuadratureRule::midpoint;

  double step() const { return (b - a) / static_cast<double>(panels); }
  std::int64_t node_count() const { return rule == QuadratureRule::midpoint ? panels : panels + 1; }
  double node(std::int64_t i) const;
  double weight(std::int64_t i) const;
  QuadratureGrid refined() const;  // step halved
};

// Smallest panel count on [a, b] whose step does not exceed max_step.
QuadratureGrid make_grid(double a, double b, double max_step, QuadratureRule rule = QuadratureRule::midpoint);

// Step min(omega/8, 1/(16 maxphase)), maxphase = 2 max[p^c] + M, on the
// minor arc.
double oscillation_step(const ProblemParams& params, const PrimeFloorTable& table);
QuadratureGrid minor_arc_grid(const ProblemParams& params, const PrimeFloorTable& table);

// ---------------------------------------------------------------------------
// Major arc
// ---------------------------------------------------------------------------

// D[s] = sum over ordered pairs with [p1^c] + [p2^c] = s of log p1 log p2.
std::vector<double> pair_sum_distribution(const PrimeFloorTable& table);

// integral_{-omega}^{omega} T(x)^2 e(-xn) dx via the sinc kernel
// sin(2 pi omega d)/(pi d), d = [p1^c] + [p2^c] - n, summed pairwise after
// grouping pairs by their sum.
class MajorArcIntegral {
 public:
  MajorArcIntegral(const PrimeFloorTable& table, double omega);
  cplx operator()(std::int64_t n) const;
  double omega() const { return omega_; }

 private:
  std::vector<double> dist_;
  double omega_;
};

cplx major_arc_integral_exact(const ProblemParams& params, std::int64_t n);

// Gamma(1+g)^2 / Gamma(2g) n^(2g-1).
double main_term(std::int64_t n, double gamma);

// ---------------------------------------------------------------------------
// Full period
// ---------------------------------------------------------------------------

struct FullPeriodIdentity {
  double integral = 0.0;  // pairwise kernel over [-omega, 1-omega]
  double direct = 0.0;    // R_w(n) from the enumerated table
};

FullPeriodIdentity full_period_rep_identity(const PrimeFloorTable& table, const RepTable& reps, double omega,
                                            std::int64_t n);
FullPeriodIdentity full_period_rep_identity(const ProblemParams& params, std::int64_t n);

// integral over one full period of |T|^2, pairwise with the closed-form
// kernel, and the diagonal sum of (log p)^2 it must equal.
double full_period_square_moment(const PrimeFloorTable& table, double start = 0.0);
double parseval_sum(const PrimeFloorTable& table);

// ---------------------------------------------------------------------------
// Quadrature on the minor arc
// ---------------------------------------------------------------------------

struct MomentReport {
  int power = 4;
  double value = 0.0;     // refined grid
  double coarse = 0.0;    // given grid
  double rel_diff = 0.0;
  double step = 0.0;      // refined step
  std::int64_t nodes = 0; // refined node count
};

inline constexpr double kGridTolerance = 0.05;

// integral of |T|^power over the grid's interval at the grid step and at
// half of it. Throws GridTooCoarse if they differ by more than 5%.
MomentReport minor_arc_moment(const PrimeFloorTable& table, int power, const QuadratureGrid& grid);

struct ArcIntegralQuadrature {
  std::vector<cplx> value;   // refined
  std::vector<cplx> coarse;
};

// integral of T(x)^2 e(-xn) over the grid's interval for each n.
ArcIntegralQuadrature arc_integral_quadrature(const PrimeFloorTable& table, std::span<const std::int64_t> ns,
                                              const QuadratureGrid& grid);

struct MeanSquareReport {
  double B = 0.0;
  double upper = 0.0;   // 2B, clipped at 1
  bool clipped = false;
  double lhs = 0.0;     // refined quadrature
  double coarse = 0.0;
  double rhs = 0.0;     // X B + X^(2-c) log X
  double ratio = 0.0;
};

// V(y) = sum a_n e([n^c] y) over the coefficient range, X = coeffs.hi().
// Requires 0 < B < 1.
MeanSquareReport mean_square_check(const CoefficientSeq& coeffs, const Rational& c, double B);

struct BesselReport {
  std::size_t samples = 0;
  double sum_sq = 0.0;   // sum_n |minor-arc integral|^2
  double moment = 0.0;   // int_m |T|^4
  double ratio = 0.0;
  bool holds = true;     // sum_sq <= moment (1 + 5%)
};

// Minor-arc integral of each n is R_w(n) minus the exact major-arc value.
BesselReport bessel_link(const MajorArcIntegral& major, const RepTable& reps,
                         std::span<const std::int64_t> sample_n, double fourth_moment);

}  // namespace pslab
