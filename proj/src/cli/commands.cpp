#include <algorithm>
#include <cmath>
#include <random>

#include "pslab/circle.hpp"
#include "pslab/cli.hpp"
#include "pslab/exceptional.hpp"
#include "pslab/expsum.hpp"
#include "pslab/floor_power.hpp"
#include "pslab/hb_identity.hpp"
#include "pslab/params.hpp"
#include "pslab/vdc.hpp"

namespace pslab::cli {

namespace {

ProblemParams params_of(const RunConfig& cfg) {
  return make_params(Rational::parse(cfg.c), cfg.N, cfg.M ? cfg.M : cfg.N, cfg.eps,
                     parse_sigma_variant(cfg.sigma_variant));
}

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

std::vector<std::int64_t> sizes_or(const RunConfig& cfg, std::int64_t fallback) {
  if (cfg.X_list.empty()) return {fallback};
  for (const auto X : cfg.X_list)
    if (X < 4) throw ConfigError("--X entries must be at least 4");
  return cfg.X_list;
}

}  // namespace

Report cmd_exceptional(const RunConfig& cfg) {
  const auto c = Rational::parse(cfg.c);
  const auto table = build_rep_table(c, cfg.N);
  const auto rep = exceptional_set(table, cfg.n0);

  Report out;
  Table reps{"representations",
             {"R(n): ordered prime pairs (p1, p2) with [p1^c] + [p2^c] = n, a count",
              "R_w(n): sum of log p1 log p2 over the same pairs, natural logarithms"},
             {"n", "R", "R_w"}};
  for (std::int64_t n = cfg.n0; n <= cfg.N; ++n) reps.add({n, table.R(n), table.Rw(n)});

  Table dyadic{"dyadic", {"Z(M): exceptional n in (M/2, M], a count"}, {"M", "Z"}};
  for (auto it = rep.dyadic_Z.rbegin(); it != rep.dyadic_Z.rend(); ++it) dyadic.add({it->first, it->second});

  std::vector<std::int64_t> Ns;
  for (std::int64_t N = 1000; N < cfg.N; N *= 10) Ns.push_back(N);
  if (cfg.N >= 1000) Ns.push_back(cfg.N);
  Table density{"density", {"density = |E_c(N)| / N over n0 <= n <= N, dimensionless"}, {"N", "exceptional", "density"}};
  std::optional<DensityTrend> trend;
  if (!Ns.empty()) {
    trend = density_trend(c, Ns, cfg.n0);
    for (const auto& r : trend->rows) density.add({r.N, r.count, r.density});
  }

  Table summary{"summary",
                {"fitted exponent: least squares slope of log|E_c(N)| against log N",
                 "theorem exponent: 1 - sigma(c), reported only"},
                {"c", "N", "n0", "exceptional", "density", "fitted_exponent", "theorem_exponent", "non_increasing"}};
  auto opt = [](const std::optional<double>& v) -> Cell { return v ? Cell{*v} : Cell{std::string("none")}; };
  summary.add({c.str(), cfg.N, cfg.n0, static_cast<std::int64_t>(rep.exceptional.size()), rep.density,
               trend ? opt(trend->fitted_exponent) : Cell{std::string("none")},
               trend ? opt(trend->theorem_exponent) : Cell{std::string("none")},
               std::string(trend && !trend->non_increasing ? "no" : "yes")});

  out.tables = {summary, density, dyadic, reps};
  out.extra = {{"c", c.str()}, {"N", cfg.N}, {"density", rep.density}, {"exceptional", rep.exceptional}};
  return out;
}

Report cmd_majorarc(const RunConfig& cfg) {
  const auto p = params_of(cfg);
  std::vector<std::int64_t> ns = cfg.n_list;
  if (ns.empty()) ns.push_back(3 * p.bigM / 4);
  for (const auto n : ns)
    if (2 * n <= p.bigM || n > p.bigM) throw ConfigError("--n entries must lie in (M/2, M]");
  const auto table = prime_floor_table(p.c, p.bigM);
  const MajorArcIntegral major(table, p.omega);

  Table t{"major_arc",
          {"integral of T(x)^2 e(-xn) over [-omega, omega], exact pairwise sinc kernel",
           "main term Gamma(1+g)^2 / Gamma(2g) n^(2g-1), g = 1/c; ratio = integral / main term"},
          {"n", "M", "omega", "integral_re", "integral_im", "main_term", "ratio"}};
  for (const auto n : ns) {
    const cplx v = major(n);
    const double mt = main_term(n, p.gamma);
    t.add({n, p.bigM, p.omega, v.real(), v.imag(), mt, v.real() / mt});
  }
  Report out;
  out.tables = {t};
  return out;
}

Report cmd_moment4(const RunConfig& cfg) {
  const auto p = params_of(cfg);
  const auto table = prime_floor_table(p.c, p.bigM);
  const auto grid = minor_arc_grid(p, table);
  const auto m4 = minor_arc_moment(table, 4, grid);
  const auto m2 = minor_arc_moment(table, 2, grid);
  const double cv = p.c_value();
  const double rhs4 = std::pow(p.bigX, 4.0 - cv - cv * p.sigma + p.eps);

  Table t{"moments",
          {"integral of |T(x)|^k over the minor arc [omega, 1 - omega], midpoint rule at two steps",
           "k = 4 is compared with X^(4 - c - c sigma + eps), X = M^(1/c)"},
          {"power", "M", "X", "value", "coarse", "rel_diff", "step", "nodes", "rhs", "ratio"}};
  t.add({std::int64_t{2}, p.bigM, p.bigX, m2.value, m2.coarse, m2.rel_diff, m2.step, m2.nodes, std::string("none"),
         std::string("none")});
  t.add({std::int64_t{4}, p.bigM, p.bigX, m4.value, m4.coarse, m4.rel_diff, m4.step, m4.nodes, rhs4, m4.value / rhs4});

  Table parseval{"parseval",
                 {"integral of |T|^2 over a full period by the pairwise closed form against sum (log p)^2"},
                 {"full_period", "diagonal", "rel_diff"}};
  const double fp = full_period_square_moment(table, -p.omega);
  const double diag = parseval_sum(table);
  parseval.add({fp, diag, diag > 0 ? std::fabs(fp - diag) / diag : 0.0});
  Report out;
  out.tables = {t, parseval};
  return out;
}

Report cmd_bounds(const RunConfig& cfg) {
  const auto p = params_of(cfg);
  BoundRatioOptions opts;
  for (const auto X : cfg.X_list) opts.X_list.push_back(static_cast<double>(X));
  const auto rows = bound_ratio_report(p, opts);
  Table t{"bound_ratios",
          {"worst lhs / rhs over 64 interior points of the minor arc",
           "complete_sum: |sum_{n<=X} e(x[n^c])| vs X^(2-c-c sigma+eps/2) + X^(1-c)/||x||",
           "prime_sum: |T(x)| vs X^(1-c sigma/2+eps/4)",
           "complete_h_sum: sum_h min(1/(h+1), H/h^2)|S_h|, H = X^(c-1+c sigma)",
           "prime_h_sum: the same with von Mangoldt weights, H = X^(c sigma/2), vs X^(1-c sigma/2+eps/6)"},
          {"quantity", "X", "x", "lhs", "rhs", "ratio"}};
  for (const auto& r : rows) t.add({r.quantity, r.X, r.x, r.lhs, r.rhs, r.ratio});
  Report out;
  out.tables = {t};
  return out;
}

Report cmd_bprocess(const RunConfig& cfg) {
  const double c = Rational::parse(cfg.c).to_double();
  Table t{"b_process",
          {"sum over X/2 <= n <= X of e(alpha n^c) against its stationary-phase transform",
           "constant = |direct - transformed| / (log(F/X + 2) + X F^(-1/2)), F = alpha X^c"},
          {"alpha", "X", "F", "direct_abs", "transformed_abs", "discrepancy", "error_shape", "constant", "points",
           "status"}};
  double worst = 0.0;
  for (const auto X : sizes_or(cfg, 1000)) {
    for (int e = -3; e <= 2; ++e) {
      const double alpha = std::pow(10.0, e);
      const auto f = power_phase(alpha, c, static_cast<double>(X));
      const auto r = b_process(f, (X + 1) / 2, X);
      worst = std::max(worst, r.fitted_constant);
      t.add({alpha, X, f.F, std::abs(r.direct_sum), std::abs(r.transformed_sum), r.discrepancy, r.error_shape,
             r.fitted_constant, static_cast<std::int64_t>(r.stationary_points.size()), to_string(r.status)});
    }
  }
  Table s{"b_process_summary", {"largest fitted constant over the corpus"}, {"max_constant"}};
  s.add({worst});
  Report out;
  out.tables = {s, t};
  return out;
}

Report cmd_hbident(const RunConfig& cfg) {
  Table params{"parameters",
               {"u = X^(1/5)/128, z = X^(2/5), v = 128 X^(1/3); constraint rows compare lhs <= rhs"},
               {"X", "constraint", "lhs", "rhs", "holds"}};
  Table t{"decomposition",
          {"sum_{n<=X} Lambda(n) G(n) recombined from type I and type II sums",
           "max_rel_error over random |G| <= 1, relative to psi(X)"},
          {"X", "type_i", "type_ii", "unclassified", "advisory", "psi", "recombined_psi", "max_rel_error"}};
  std::mt19937_64 rng(cfg.seed);
  for (const auto X : sizes_or(cfg, 1000)) {
    const auto rep = default_params(static_cast<double>(X));
    for (const auto& con : rep.constraints)
      params.add({X, con.name, con.lhs, con.rhs, std::string(con.holds ? "yes" : "no")});
    DecomposeOptions opts;
    opts.seed = rng();
    const auto d = decompose(X, rep.params, opts);
    std::vector<cplx> ones(X + 1, cplx(1.0, 0.0));
    const double psi = chebyshev_psi(X);
    double worst = 0.0;
    std::vector<cplx> g(X + 1);
    for (int s = 0; s < cfg.samples; ++s) {
      for (auto& v : g) {
        const double r = unit_draw(rng);
        const double a = unit_draw(rng);
        v = std::polar(r, 2.0 * M_PI * a);
      }
      worst = std::max(worst, std::abs(recombine(d, g) - direct_lambda_sum(X, g)) / psi);
    }
    t.add({X, d.stats.type_i, d.stats.type_ii, d.stats.unclassified, std::string(d.advisory ? "yes" : "no"), psi,
           recombine(d, ones).real(), worst});
  }
  Report out;
  out.tables = {t, params};
  return out;
}

Report cmd_expsum(const RunConfig& cfg) {
  const auto p = params_of(cfg);
  const auto table = prime_floor_table(p.c, p.bigM);
  const auto X = static_cast<std::int64_t>(std::floor(p.bigX));
  const auto ones = CoefficientSeq::constant_one(1, X);
  const double H = std::clamp(p.h_complete(), 2.0, static_cast<double>(X));
  const auto hmax = default_h_max(H, static_cast<double>(X), p.eps);

  Table t{"exponential_sums",
          {"T(x) = sum_{p <= X} log p e(x[p^c]); W(x) = sum_{n <= X} e(x[n^c]); x uniform on the minor arc",
           "majorant: X log X / H + sum_h min(1, 1/h)|S(h+x)| + sum_h min(1/h, H/h^2)|S(h)|, H = X^(c-1+c sigma)"},
          {"x", "T_re", "T_im", "T_abs", "W_abs", "majorant", "ratio", "truncation_warning"}};
  std::mt19937_64 rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    const double x = p.omega + (1.0 - 2.0 * p.omega) * unit_draw(rng);
    const cplx T = t_sum(table, x).value;
    const auto l1 = floor_sum_majorant(ones, p.c, x, H, hmax);
    t.add({x, T.real(), T.imag(), std::abs(T), l1.abs_w, l1.majorant(), l1.ratio(),
           std::string(l1.truncation_warning ? "yes" : "no")});
  }
  Report out;
  out.tables = {t};
  return out;
}

}  // namespace pslab::cli
