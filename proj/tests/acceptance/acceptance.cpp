#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pslab/circle.hpp"
#include "pslab/exceptional.hpp"
#include "pslab/floor_power.hpp"
#include "pslab/hb_identity.hpp"
#include "pslab/params.hpp"
#include "pslab/phase.hpp"
#include "pslab/vdc.hpp"

using namespace pslab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const Rational c11(11, 10);

Outcome representation_identity() {
  const auto p = make_params(c11, 10000, 10000);
  const auto t = prime_floor_table(p.c, p.bigM);
  const auto reps = build_rep_table(p.c, p.bigM);
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::int64_t n = p.bigM / 2 + 1 + static_cast<std::int64_t>(rng() % (p.bigM / 2));
    const auto r = full_period_rep_identity(t, reps, p.omega, n);
    worst = std::max(worst, std::fabs(r.integral - r.direct) / std::max(1.0, std::fabs(r.direct)));
  }
  return {worst <= 1e-9, "max relative difference " + fmt("%.3g", worst) + " over 100 n"};
}

Outcome parseval_anchor() {
  double worst = 0.0;
  for (const std::int64_t X : {10, 100, 1000, 10000}) {
    const auto t = prime_floor_table(c11, floor_pow(X, c11).value);
    if (t.primes.back() > X) return {false, "prime table overshoots X"};
    double diag = 0.0;
    for (const auto q : oracle::primes_upto(X)) diag += std::pow(std::log(static_cast<double>(q)), 2);
    const double fp = full_period_square_moment(t, -0.05);
    worst = std::max(worst, std::fabs(fp - diag) / diag);
  }
  return {worst <= 1e-9, "max relative difference " + fmt("%.3g", worst) + " for X up to 1e4"};
}

Outcome hb_exactness() {
  std::ostringstream os;
  bool ok = true;
  {
    const auto d = decompose(10, default_params(10.0).params);
    std::vector<cplx> ones(11, 1.0);
    const double v = recombine(d, ones).real();
    ok = ok && std::fabs(v - 7.8320) < 5e-5;
    os << "psi(10) recombined " << fmt("%.6f", v);
  }
  for (const std::int64_t X : {100, 1000, 10000}) {
    const auto d = decompose(X, default_params(static_cast<double>(X)).params);
    const double psi = chebyshev_psi(X);
    std::mt19937_64 rng(static_cast<std::uint64_t>(X) * 7919);
    double worst = 0.0;
    std::vector<cplx> g(X + 1);
    for (int i = 0; i < 100; ++i) {
      for (auto& v : g) {
        const double r = static_cast<double>(rng() >> 11) * 0x1p-53;
        const double a = static_cast<double>(rng() >> 11) * 0x1p-53;
        v = std::polar(r, 2 * M_PI * a);
      }
      worst = std::max(worst, std::abs(recombine(d, g) - direct_lambda_sum(X, g)) / psi);
    }
    ok = ok && worst <= 1e-9;
    os << "; X=" << X << " max rel " << fmt("%.2g", worst);
  }
  return {ok, os.str()};
}

Outcome b_process_corpus() {
  double worst = 0.0;
  int instances = 0;
  for (const double c : {1.1, 1.2})
    for (const double X : {1000.0, 10000.0})
      for (int e = -3; e <= 2; ++e) {
        const auto f = power_phase(std::pow(10.0, e), c, X);
        const auto out = b_process(f, static_cast<std::int64_t>(X / 2), static_cast<std::int64_t>(X));
        worst = std::max(worst, out.fitted_constant);
        ++instances;
      }
  return {worst <= 10.0, "largest constant " + fmt("%.4f", worst) + " over " + std::to_string(instances) + " phases"};
}

Outcome major_arc_trend() {
  std::vector<double> dev;
  std::ostringstream os;
  double at5 = 0.0;
  for (const std::int64_t M : {10000, 100000, 1000000}) {
    const auto p = make_params(c11, M, M);
    const std::int64_t n = 3 * M / 4;
    const double ratio = major_arc_integral_exact(p, n).real() / main_term(n, p.gamma);
    if (M == 100000) at5 = ratio;
    dev.push_back(std::fabs(ratio - 1.0));
    os << (dev.size() > 1 ? ", " : "") << "M=" << M << " ratio " << fmt("%.4f", ratio);
  }
  const bool ok = at5 >= 0.5 && at5 <= 2.0 && dev[1] <= dev[0] && dev[2] <= dev[1];
  return {ok, os.str()};
}

Outcome bessel_chain() {
  const auto p = make_params(c11, 10000, 10000);
  const auto t = prime_floor_table(p.c, p.bigM);
  const auto reps = build_rep_table(p.c, p.bigM);
  const MajorArcIntegral major(t, p.omega);
  const auto m4 = minor_arc_moment(t, 4, minor_arc_grid(p, t));
  std::mt19937_64 rng(50);
  std::vector<std::int64_t> ns;
  for (int i = 0; i < 50; ++i) ns.push_back(p.bigM / 2 + 1 + static_cast<std::int64_t>(rng() % (p.bigM / 2)));
  const auto r = bessel_link(major, reps, ns, m4.value);
  return {r.holds, "sum |minor|^2 = " + fmt("%.6g", r.sum_sq) + ", fourth moment " + fmt("%.6g", r.moment) +
                       " (ratio " + fmt("%.3g", r.ratio) + ")"};
}

Outcome exceptional_truth() {
  const auto e = exceptional_set(c11, 20, 4);
  const bool exact = e.exceptional == std::vector<std::int64_t>{9, 12, 14, 17, 20};
  const auto d = density_trend(c11, {1000, 10000, 100000});
  std::ostringstream os;
  os << "E(20) " << (exact ? "matches" : "differs") << "; densities";
  for (const auto& r : d.rows) os << " " << fmt("%.5g", r.density);
  return {exact && d.non_increasing, os.str()};
}

Outcome floor_certification() {
  std::int64_t uncertified = 0, mismatched = 0;
  for (const auto c : {Rational(11, 10), Rational(6, 5)})
    for (std::int64_t n = 1; n <= 100000; ++n) {
      const auto f = floor_pow(n, c);
      uncertified += !f.certified;
      mismatched += f.value != oracle::floor_pow(n, c.num, c.den);
    }
  return {uncertified == 0 && mismatched == 0,
          std::to_string(uncertified) + " uncertified, " + std::to_string(mismatched) + " oracle mismatches"};
}

Outcome sigma_evaluator() {
  const double cross = 3136.0 / 2560.0;
  const double a = sigma_branch_a(cross), b = sigma_branch_b(cross);
  const double end = sigma_of_c(24.0 / 19.0, SigmaVariant::theorem);
  const bool ok = std::fabs(a - 0.05) <= 1e-12 && std::fabs(b - 0.05) <= 1e-12 && std::fabs(end) <= 1e-12;
  return {ok, "branches " + fmt("%.15f", a) + ", " + fmt("%.15f", b) + "; sigma(24/19) = " + fmt("%.3g", end)};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome cli_determinism(const std::string& tool, const std::string& work) {
  const std::vector<std::string> configs = {
      "exceptional --N 20000 --seed 3",
      "majorarc --N 20000 --n 15000",
      "hbident --X 2000 --samples 4 --seed 11",
      "expsum --N 5000 --samples 6 --seed 5 --format json",
  };
  int k = 0;
  for (const auto& cfg : configs) {
    std::string first;
    for (const int t : {1, 4, 8}) {
      const std::string out = work + "/accept_det_" + std::to_string(k) + "_" + std::to_string(t);
      const std::string cmd = "\"" + tool + "\" " + cfg + " --threads " + std::to_string(t) + " --out \"" + out + "\"";
      if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + cmd};
      const auto body = slurp(out);
      if (body.empty()) return {false, "empty output: " + cmd};
      if (t == 1)
        first = body;
      else if (body != first)
        return {false, "output differs at " + std::to_string(t) + " threads: " + cfg};
    }
    ++k;
  }
  return {true, std::to_string(configs.size()) + " configurations byte-identical at 1, 4, 8 threads"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : "pslab";
  const std::string work = argc > 2 ? argv[2] : ".";
  std::error_code ec;
  std::filesystem::create_directories(work, ec);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact representation identity", representation_identity},
      {"Parseval anchor", parseval_anchor},
      {"Heath-Brown identity exactness", hb_exactness},
      {"B-process verification", b_process_corpus},
      {"major-arc trend", major_arc_trend},
      {"Bessel chain", bessel_chain},
      {"exceptional-set ground truth", exceptional_truth},
      {"floor-power certification", floor_certification},
      {"sigma evaluator", sigma_evaluator},
      {"CLI determinism", [&] { return cli_determinism(tool, work); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu %-32s %s  %s  [%.1fs]\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
