#include "pslab/exceptional.hpp"

#include <algorithm>
#include <cmath>

#include "pslab/circle.hpp"
#include "pslab/compensated.hpp"
#include "pslab/errors.hpp"
#include "pslab/expsum.hpp"
#include "pslab/floor_power.hpp"

namespace pslab {

RepTable build_rep_table(const Rational& c, std::int64_t N) {
  if (N < 4) throw DomainError("build_rep_table requires N >= 4");
  if (less(c, Rational(1, 1))) throw DomainError("build_rep_table requires c >= 1");
  const auto table = prime_floor_table(c, N);
  const auto& k = table.floors;
  const auto& w = table.weights;
  const auto np = static_cast<std::int64_t>(k.size());

  RepTable out;
  out.c = c;
  out.N = N;
  out.counts.assign(N + 1, 0);
  out.weighted.assign(N + 1, 0.0);

  constexpr std::int64_t kBlock = 1 << 15;
  const std::int64_t nblocks = N / kBlock + 1;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t blk = 0; blk < nblocks; ++blk) {
    const std::int64_t lo = blk * kBlock;
    const std::int64_t hi = std::min(N, lo + kBlock - 1);
    for (std::int64_t i = 0; i < np; ++i) {
      if (np == 0 || k[i] + k.front() > hi) break;
      auto it = std::lower_bound(k.begin(), k.end(), lo - k[i]);
      for (; it != k.end() && k[i] + *it <= hi; ++it) {
        const std::int64_t n = k[i] + *it;
        out.counts[n] += 1;
        out.weighted[n] += w[i] * w[it - k.begin()];
      }
    }
  }
  return out;
}

ExceptionalReport exceptional_set(const RepTable& table, std::int64_t n0) {
  if (n0 < 4 || n0 > table.N) throw DomainError("exceptional_set requires 4 <= n0 <= N");
  ExceptionalReport rep;
  rep.c = table.c;
  rep.N = table.N;
  rep.n0 = n0;
  for (std::int64_t n = n0; n <= table.N; ++n)
    if (table.counts[n] == 0) rep.exceptional.push_back(n);
  rep.density = static_cast<double>(rep.exceptional.size()) / static_cast<double>(table.N);
  for (std::int64_t M = table.N; M >= n0; M /= 2) {
    const auto first = std::upper_bound(rep.exceptional.begin(), rep.exceptional.end(), M / 2);
    const auto last = std::upper_bound(rep.exceptional.begin(), rep.exceptional.end(), M);
    rep.dyadic_Z[M] = last - first;
  }
  return rep;
}

ExceptionalReport exceptional_set(const Rational& c, std::int64_t N, std::int64_t n0) {
  return exceptional_set(build_rep_table(c, N), n0);
}

DensityTrend density_trend(const Rational& c, const std::vector<std::int64_t>& N_list, std::int64_t n0) {
  if (N_list.empty()) throw DomainError("density_trend needs at least one N");
  for (std::size_t i = 0; i < N_list.size(); ++i) {
    if (N_list[i] < 1000) throw DomainError("density_trend requires every N >= 1000");
    if (i > 0 && N_list[i] <= N_list[i - 1]) throw DomainError("density_trend requires ascending N");
  }
  const auto full = build_rep_table(c, N_list.back());
  DensityTrend out;
  out.c = c;
  for (const auto N : N_list) {
    DensityRow row;
    row.N = N;
    for (std::int64_t n = n0; n <= N; ++n)
      if (full.counts[n] == 0) ++row.count;
    row.density = static_cast<double>(row.count) / static_cast<double>(N);
    out.rows.push_back(row);
  }
  for (std::size_t i = 1; i < out.rows.size(); ++i)
    if (out.rows[i].density > out.rows[i - 1].density) out.non_increasing = false;

  const bool fittable = out.rows.size() >= 2 &&
                        std::all_of(out.rows.begin(), out.rows.end(), [](const DensityRow& r) { return r.count > 0; });
  if (fittable) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<double>(out.rows.size());
    for (const auto& r : out.rows) {
      const double lx = std::log(static_cast<double>(r.N));
      const double ly = std::log(static_cast<double>(r.count));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    out.fitted_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  if (exponent_in_window(c)) out.theorem_exponent = 1.0 - sigma_of_c(c.to_double(), SigmaVariant::theorem);
  return out;
}

// ---------------------------------------------------------------------------
// Ratio reports
// ---------------------------------------------------------------------------

namespace {

// sum_{h=0}^{h_max} min(1/(h+1), H/h^2) max_g |sum_n a_n e((h+g) n^c)| with
// g = x at h = 0 and g ranging over `shifts` for h >= 1.
double weighted_h_series(const CoefficientSeq& coeffs, const Rational& c, double x, double H, std::int64_t h_max,
                         const std::vector<double>& shifts) {
  CompensatedSum acc;
  for (std::int64_t h = 0; h <= h_max; ++h) {
    const double hd = static_cast<double>(h);
    const double weight = h == 0 ? 1.0 : std::min(1.0 / (hd + 1.0), H / (hd * hd));
    double best = 0.0;
    if (h == 0) {
      best = std::abs(weighted_smooth_sum(coeffs, x, c).value);
    } else {
      for (const double g : shifts) best = std::max(best, std::abs(weighted_smooth_sum(coeffs, hd + g, c).value));
    }
    acc.add(weight * best);
  }
  return acc.value();
}

void keep_worst(BoundRatioRow& row, double x, double lhs, double rhs) {
  const double r = lhs / rhs;
  if (r >= row.ratio) {
    row.ratio = r;
    row.x = x;
    row.lhs = lhs;
    row.rhs = rhs;
  }
}

}  // namespace

std::vector<BoundRatioRow> bound_ratio_report(const ProblemParams& params, const BoundRatioOptions& opts) {
  if (opts.x_points < 1) throw DomainError("bound_ratio_report needs at least one x point");
  const double cv = params.c_value();
  const double s = params.sigma;
  const double e = params.eps;
  std::vector<double> X_list = opts.X_list;
  if (X_list.empty()) X_list.push_back(params.bigX);

  std::vector<double> xs(opts.x_points);
  const double width = 1.0 - 2.0 * params.omega;
  for (int i = 0; i < opts.x_points; ++i)
    xs[i] = params.omega + (static_cast<double>(i) + 0.5) * width / static_cast<double>(opts.x_points);

  std::vector<BoundRatioRow> rows;
  for (const double Xreal : X_list) {
    const auto X = static_cast<std::int64_t>(std::floor(Xreal));
    if (X < 4) throw DomainError("bound_ratio_report requires X >= 4");
    const double Xd = static_cast<double>(X);
    const auto ones = CoefficientSeq::constant_one(1, X);
    const auto floors = floor_pow_range(1, X, params.c);
    const auto primes = prime_floor_table(params.c, floor_pow(X, params.c).value);
    const auto half_ones = CoefficientSeq::constant_one(X / 2 + 1, X);
    const auto half_lambda = CoefficientSeq::von_mangoldt(X / 2 + 1, X);

    const double H1 = std::pow(Xd, cv - 1.0 + cv * s);
    const double H2 = std::pow(Xd, cv * s / 2.0);
    const std::int64_t h1 = default_h_max(H1, Xd, e);
    const std::int64_t h2 = default_h_max(H2, Xd, e);

    BoundRatioRow complete{"complete_sum", Xd}, prime{"prime_sum", Xd}, chs{"complete_h_sum", Xd},
        phs{"prime_h_sum", Xd};
    for (const double x : xs) {
      const double frac = x - std::floor(x);
      const double complete_rhs = std::pow(Xd, 2.0 - cv - cv * s + e / 2.0) +
                                  std::pow(Xd, 1.0 - cv) / dist_nearest_int(x);
      keep_worst(complete, x, std::abs(w_sum(ones, floors, x).value), complete_rhs);
      keep_worst(prime, x, std::abs(t_sum(primes, x).value), std::pow(Xd, 1.0 - cv * s / 2.0 + e / 4.0));
      keep_worst(chs, x, weighted_h_series(half_ones, params.c, frac, H1, h1, {0.0, frac, -frac}), complete_rhs);
      keep_worst(phs, x, weighted_h_series(half_lambda, params.c, x, H2, h2, {x, -x}),
                 std::pow(Xd, 1.0 - cv * s / 2.0 + e / 6.0));
    }
    rows.push_back(complete);
    rows.push_back(prime);
    rows.push_back(chs);
    rows.push_back(phs);
  }

  if (opts.include_moment) {
    const auto table = prime_floor_table(params.c, params.bigM);
    const auto m = minor_arc_moment(table, 4, minor_arc_grid(params, table));
    BoundRatioRow row{"fourth_moment", params.bigX};
    row.lhs = m.value;
    row.rhs = std::pow(params.bigX, 4.0 - cv - cv * s + e);
    row.ratio = row.lhs / row.rhs;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pslab
