#include "pslab/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pslab/compensated.hpp"
#include "pslab/errors.hpp"
#include "pslab/exceptional.hpp"

namespace pslab {

ArcDecomposition arcs(const ProblemParams& params) {
  ArcDecomposition a;
  a.omega = params.omega;
  a.major = {-params.omega, params.omega};
  a.minor = {params.omega, 1.0 - params.omega};
  return a;
}

double QuadratureGrid::node(std::int64_t i) const {
  const double h = step();
  return rule == QuadratureRule::midpoint ? a + (static_cast<double>(i) + 0.5) * h : a + static_cast<double>(i) * h;
}

double QuadratureGrid::weight(std::int64_t i) const {
  const double h = step();
  if (rule == QuadratureRule::trapezoid && (i == 0 || i == panels)) return 0.5 * h;
  return h;
}

QuadratureGrid QuadratureGrid::refined() const {
  QuadratureGrid g = *this;
  g.panels *= 2;
  return g;
}

QuadratureGrid make_grid(double a, double b, double max_step, QuadratureRule rule) {
  if (!(b > a) || !(max_step > 0.0)) throw DomainError("grid needs b > a and a positive step");
  QuadratureGrid g;
  g.a = a;
  g.b = b;
  g.rule = rule;
  g.panels = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil((b - a) / max_step)));
  return g;
}

double oscillation_step(const ProblemParams& params, const PrimeFloorTable& table) {
  const double max_floor = table.size() ? static_cast<double>(table.floors.back()) : 0.0;
  const double maxphase = 2.0 * max_floor + static_cast<double>(params.bigM);
  return std::min(params.omega / 8.0, 1.0 / (16.0 * maxphase));
}

QuadratureGrid minor_arc_grid(const ProblemParams& params, const PrimeFloorTable& table) {
  return make_grid(params.omega, 1.0 - params.omega, oscillation_step(params, table));
}

// ---------------------------------------------------------------------------
// Pairs grouped by their sum
// ---------------------------------------------------------------------------

std::vector<double> pair_sum_distribution(const PrimeFloorTable& table) {
  const auto& k = table.floors;
  const auto& w = table.weights;
  if (k.empty()) return {0.0};
  const std::int64_t smax = 2 * k.back();
  std::vector<double> dist(smax + 1, 0.0);
  constexpr std::int64_t kBlock = 1 << 16;
  const std::int64_t nblocks = smax / kBlock + 1;
  const auto np = static_cast<std::int64_t>(k.size());
  // Each s is owned by one block and accumulated over p1 ascending.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t blk = 0; blk < nblocks; ++blk) {
    const std::int64_t lo = blk * kBlock;
    const std::int64_t hi = std::min(smax, lo + kBlock - 1);
    for (std::int64_t i = 0; i < np; ++i) {
      if (k[i] + k.front() > hi) break;
      auto first = std::lower_bound(k.begin(), k.end(), lo - k[i]);
      for (auto it = first; it != k.end() && k[i] + *it <= hi; ++it)
        dist[k[i] + *it] += w[i] * w[it - k.begin()];
    }
  }
  return dist;
}

MajorArcIntegral::MajorArcIntegral(const PrimeFloorTable& table, double omega)
    : dist_(pair_sum_distribution(table)), omega_(omega) {}

cplx MajorArcIntegral::operator()(std::int64_t n) const {
  // The kernel is real and even: sin(2 pi omega d) / (pi d).
  CompensatedSum acc;
  const auto smax = static_cast<std::int64_t>(dist_.size()) - 1;
  for (std::int64_t s = 0; s <= smax; ++s) {
    const double ds = dist_[s];
    if (ds == 0.0) continue;
    const std::int64_t d = s - n;
    const double ker = d == 0 ? 2.0 * omega_
                              : sin_pi(2.0 * omega_ * static_cast<double>(d)) /
                                    (std::numbers::pi * static_cast<double>(d));
    acc.add(ds * ker);
  }
  return {acc.value(), 0.0};
}

cplx major_arc_integral_exact(const ProblemParams& params, std::int64_t n) {
  return MajorArcIntegral(prime_floor_table(params.c, params.bigM), params.omega)(n);
}

double main_term(std::int64_t n, double gamma) {
  if (n < 1) throw DomainError("main_term requires n >= 1");
  const double g1 = gamma_fn(1.0 + gamma);
  return g1 * g1 / gamma_fn(2.0 * gamma) * std::pow(static_cast<double>(n), 2.0 * gamma - 1.0);
}

// ---------------------------------------------------------------------------
// Full period
// ---------------------------------------------------------------------------

FullPeriodIdentity full_period_rep_identity(const PrimeFloorTable& table, const RepTable& reps, double omega,
                                            std::int64_t n) {
  FullPeriodIdentity out;
  CompensatedComplexSum acc;
  const auto np = static_cast<std::int64_t>(table.size());
  for (std::int64_t i = 0; i < np; ++i) {
    for (std::int64_t j = 0; j < np; ++j) {
      const std::int64_t d = table.floors[i] + table.floors[j] - n;
      const cplx ker = interval_kernel(d, -omega, 1.0);
      if (ker == cplx(0.0, 0.0)) continue;
      acc.add(table.weights[i] * table.weights[j] * ker);
    }
  }
  out.integral = acc.value().real();
  out.direct = n <= reps.N ? reps.Rw(n) : 0.0;
  return out;
}

FullPeriodIdentity full_period_rep_identity(const ProblemParams& params, std::int64_t n) {
  const auto table = prime_floor_table(params.c, params.bigM);
  const auto reps = build_rep_table(params.c, std::max<std::int64_t>(4, std::min(n, params.bigM)));
  return full_period_rep_identity(table, reps, params.omega, n);
}

double full_period_square_moment(const PrimeFloorTable& table, double start) {
  CompensatedComplexSum acc;
  const auto np = static_cast<std::int64_t>(table.size());
  for (std::int64_t i = 0; i < np; ++i)
    for (std::int64_t j = 0; j < np; ++j) {
      const cplx ker = interval_kernel(table.floors[i] - table.floors[j], start, 1.0);
      if (ker == cplx(0.0, 0.0)) continue;
      acc.add(table.weights[i] * table.weights[j] * ker);
    }
  return acc.value().real();
}

double parseval_sum(const PrimeFloorTable& table) {
  CompensatedSum acc;
  for (const auto w : table.weights) acc.add(w * w);
  return acc.value();
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

namespace {

constexpr std::int64_t kQuadBlock = 1024;

std::int64_t block_count(const QuadratureGrid& grid) { return (grid.node_count() + kQuadBlock - 1) / kQuadBlock; }

// Visits every node of the grid with P(x) = sum_j coef_j e(x freq_j). Nodes
// go in fixed blocks of kQuadBlock; inside a block P is advanced by
// per-frequency rotation from an exactly evaluated anchor. visit(b, i, p)
// sees the block index, so callers keep one accumulator per block.
template <class Visit>
void scan_trig(std::span<const std::int64_t> freq, std::span<const cplx> coef, const QuadratureGrid& grid,
               Visit&& visit) {
  const std::int64_t count = grid.node_count();
  const std::int64_t nblocks = block_count(grid);
  const double h = grid.step();
  const auto nf = static_cast<std::int64_t>(freq.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const std::int64_t i0 = b * kQuadBlock;
    const std::int64_t i1 = std::min(count, i0 + kQuadBlock);
    std::vector<cplx> z(nf), rot(nf);
    const double x0 = grid.node(i0);
    for (std::int64_t j = 0; j < nf; ++j) {
      z[j] = coef[j] * unit_exp(phase_mul(x0, freq[j]));
      rot[j] = unit_exp(phase_mul(h, freq[j]));
    }
    for (std::int64_t i = i0; i < i1; ++i) {
      cplx p{0.0, 0.0};
      for (std::int64_t j = 0; j < nf; ++j) {
        p += z[j];
        z[j] *= rot[j];
      }
      visit(b, i, p);
    }
  }
}

double integrate_power(std::span<const std::int64_t> freq, std::span<const cplx> coef, const QuadratureGrid& grid,
                       int power) {
  std::vector<CompensatedSum> partial(block_count(grid));
  scan_trig(freq, coef, grid, [&](std::int64_t b, std::int64_t i, cplx p) {
    const double n2 = std::norm(p);
    const double v = power == 2 ? n2 : (power == 4 ? n2 * n2 : std::pow(n2, 0.5 * power));
    partial[b].add(grid.weight(i) * v);
  });
  CompensatedSum total;
  for (const auto& p : partial) total.add(p.value());
  return total.value();
}

std::vector<cplx> weights_as_complex(const PrimeFloorTable& t) {
  std::vector<cplx> c(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) c[i] = t.weights[i];
  return c;
}

std::vector<cplx> integrate_square_twisted(const PrimeFloorTable& table, std::span<const std::int64_t> ns,
                                           const QuadratureGrid& grid) {
  const auto coef = weights_as_complex(table);
  const std::size_t m = ns.size();
  std::vector<CompensatedComplexSum> partial(block_count(grid) * m);
  scan_trig(table.floors, coef, grid, [&](std::int64_t b, std::int64_t i, cplx p) {
    const double x = grid.node(i);
    const cplx p2 = grid.weight(i) * p * p;
    for (std::size_t k = 0; k < m; ++k) partial[b * m + k].add(p2 * unit_exp(-phase_mul(x, ns[k])));
  });
  std::vector<cplx> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    CompensatedComplexSum total;
    for (std::int64_t b = 0; b < block_count(grid); ++b) total.add(partial[b * m + k].value());
    out[k] = total.value();
  }
  return out;
}

}  // namespace

MomentReport minor_arc_moment(const PrimeFloorTable& table, int power, const QuadratureGrid& grid) {
  if (power < 1) throw DomainError("moment power must be positive");
  const auto coef = weights_as_complex(table);
  MomentReport r;
  r.power = power;
  r.coarse = integrate_power(table.floors, coef, grid, power);
  const auto fine = grid.refined();
  r.value = integrate_power(table.floors, coef, fine, power);
  r.step = fine.step();
  r.nodes = fine.node_count();
  const double scale = std::max(std::fabs(r.value), std::fabs(r.coarse));
  r.rel_diff = scale > 0.0 ? std::fabs(r.value - r.coarse) / scale : 0.0;
  if (r.rel_diff > kGridTolerance)
    throw GridTooCoarse("moment estimates at two resolutions differ by " + std::to_string(r.rel_diff));
  return r;
}

ArcIntegralQuadrature arc_integral_quadrature(const PrimeFloorTable& table, std::span<const std::int64_t> ns,
                                              const QuadratureGrid& grid) {
  ArcIntegralQuadrature out;
  out.coarse = integrate_square_twisted(table, ns, grid);
  out.value = integrate_square_twisted(table, ns, grid.refined());
  return out;
}

MeanSquareReport mean_square_check(const CoefficientSeq& coeffs, const Rational& c, double B) {
  if (!(B > 0.0 && B < 1.0)) throw DomainError("mean_square_check requires 0 < B < 1");
  MeanSquareReport r;
  r.B = B;
  r.upper = std::min(2.0 * B, 1.0);
  r.clipped = 2.0 * B > 1.0;
  const std::int64_t X = coeffs.hi();
  const double Xd = static_cast<double>(X);
  const double cv = c.to_double();
  r.rhs = Xd * B + std::pow(Xd, 2.0 - cv) * std::log(Xd);
  if (X < coeffs.lo()) return r;

  const auto floors = floor_pow_range(coeffs.lo(), X, c);
  const auto coef = coeffs.materialize();
  const double maxfreq = static_cast<double>(floors.back());
  const auto grid = make_grid(B, r.upper, 1.0 / (16.0 * std::max(maxfreq, 1.0)));
  r.coarse = integrate_power(floors, coef, grid, 2);
  r.lhs = integrate_power(floors, coef, grid.refined(), 2);
  const double scale = std::max(std::fabs(r.lhs), std::fabs(r.coarse));
  if (scale > 0.0 && std::fabs(r.lhs - r.coarse) / scale > kGridTolerance)
    throw GridTooCoarse("mean-square estimates at two resolutions disagree");
  r.ratio = r.lhs / r.rhs;
  return r;
}

BesselReport bessel_link(const MajorArcIntegral& major, const RepTable& reps, std::span<const std::int64_t> sample_n,
                         double fourth_moment) {
  BesselReport r;
  r.samples = sample_n.size();
  r.moment = fourth_moment;
  CompensatedSum acc;
  for (const auto n : sample_n) {
    const double minor = reps.Rw(n) - major(n).real();
    acc.add(minor * minor);
  }
  r.sum_sq = acc.value();
  r.ratio = r.moment > 0.0 ? r.sum_sq / r.moment : (r.sum_sq > 0.0 ? INFINITY : 0.0);
  r.holds = r.sum_sq <= r.moment * (1.0 + kGridTolerance);
  return r;
}

}  // namespace pslab
