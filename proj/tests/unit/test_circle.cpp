#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pslab/circle.hpp"
#include "pslab/errors.hpp"
#include "pslab/exceptional.hpp"

using namespace pslab;

namespace {

const Rational c11(11, 10);

// R_w(n) by enumerating prime pairs with floors from the integer oracle.
double brute_rw(std::int64_t n) {
  double s = 0.0;
  for (const auto p : oracle::primes_upto(n))
    for (const auto q : oracle::primes_upto(n))
      if (oracle::floor_pow(p, 11, 10) + oracle::floor_pow(q, 11, 10) == n)
        s += std::log(static_cast<double>(p)) * std::log(static_cast<double>(q));
  return s;
}

// Re of the integral of T(x)^2 e(-xn) over [a, b], by Gauss-Kronrod on many
// short panels with T evaluated directly.
double gk_integral(const PrimeFloorTable& t, std::int64_t n, double a, double b, int panels) {
  auto f = [&](double x) {
    std::complex<double> T{0.0, 0.0};
    for (std::size_t i = 0; i < t.size(); ++i)
      T += t.weights[i] * std::exp(std::complex<double>(0.0, 2 * std::numbers::pi * x * static_cast<double>(t.floors[i])));
    return (T * T * std::exp(std::complex<double>(0.0, -2 * std::numbers::pi * x * static_cast<double>(n)))).real();
  };
  double total = 0.0;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i)
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a + i * h, a + (i + 1) * h, 0);
  return total;
}

}  // namespace

TEST_SUITE("circle") {

TEST_CASE("arcs and grids") {
  const auto p = make_params(c11, 10000, 10000);
  const auto a = arcs(p);
  CHECK(a.major_length() + a.minor_length() == doctest::Approx(1.0));
  CHECK(a.major.lo == -p.omega);
  CHECK(a.minor.hi == 1.0 - p.omega);

  const auto g = make_grid(0.1, 0.9, 0.003);
  CHECK(g.step() <= 0.003);
  CHECK(g.node(0) == doctest::Approx(0.1 + g.step() / 2));
  CHECK(g.refined().step() == doctest::Approx(g.step() / 2));
  const auto tr = make_grid(0.0, 1.0, 0.1, QuadratureRule::trapezoid);
  CHECK(tr.node_count() == tr.panels + 1);
  CHECK(tr.weight(0) == doctest::Approx(tr.step() / 2));

  const auto t = prime_floor_table(c11, 10000);
  const double h = oscillation_step(p, t);
  CHECK(h == doctest::Approx(std::min(p.omega / 8, 1.0 / (16.0 * (2.0 * t.floors.back() + 10000)))));
  const auto mg = minor_arc_grid(p, t);
  CHECK(mg.a == p.omega);
  CHECK(mg.b == 1.0 - p.omega);
  CHECK(mg.step() <= h);
}

TEST_CASE("pair sum distribution matches enumeration") {
  const auto t = prime_floor_table(c11, 3000);
  const auto D = pair_sum_distribution(t);
  std::vector<double> ref(D.size(), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) ref[t.floors[i] + t.floors[j]] += t.weights[i] * t.weights[j];
  for (std::size_t s = 0; s < D.size(); ++s) CHECK(D[s] == doctest::Approx(ref[s]).epsilon(1e-12));
}

TEST_CASE("major arc integral edge cases") {
  const auto empty = prime_floor_table(c11, 1);
  CHECK(MajorArcIntegral(empty, 0.05)(100) == cplx(0.0, 0.0));

  const auto t = prime_floor_table(c11, 1000);
  const double omega = 0.05;
  const std::int64_t n = 100000;
  const double mind = static_cast<double>(n - 2 * t.floors.back());
  const double w = t.weight_sum();
  CHECK(std::abs(MajorArcIntegral(t, omega)(n)) <= w * w / (std::numbers::pi * mind));
}

TEST_CASE("major arc integral against Gauss-Kronrod") {
  const auto p = make_params(c11, 10000, 10000);
  const auto t = prime_floor_table(p.c, p.bigM);
  const std::int64_t n = 3 * p.bigM / 4;
  const double exact = major_arc_integral_exact(p, n).real();
  const double quad = gk_integral(t, n, -p.omega, p.omega, 2000);
  CHECK(std::fabs(exact - quad) <= 1e-6 * std::fabs(quad));
  CHECK(MajorArcIntegral(t, p.omega)(n).imag() == 0.0);
}

TEST_CASE("main term") {
  CHECK(main_term(100, 1.0) == doctest::Approx(100.0));
  CHECK(main_term(12345, 0.5) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-12));
  const double g = 10.0 / 11.0;
  CHECK(main_term(1000, g) ==
        doctest::Approx(std::pow(gamma_fn(21.0 / 11.0), 2) / gamma_fn(20.0 / 11.0) * std::pow(1000.0, 9.0 / 11.0)));
  CHECK_THROWS_AS(main_term(0, g), DomainError);
}

TEST_CASE("full period identity on small n") {
  const auto t = prime_floor_table(c11, 100);
  const auto reps = build_rep_table(c11, 100);
  const double omega = 0.1;
  const auto r4 = full_period_rep_identity(t, reps, omega, 4);
  CHECK(r4.integral == doctest::Approx(std::pow(std::log(2.0), 2)));
  CHECK(r4.direct == r4.integral);
  const auto r5 = full_period_rep_identity(t, reps, omega, 5);
  CHECK(r5.integral == doctest::Approx(2 * std::log(2.0) * std::log(3.0)));
  CHECK(r5.integral == doctest::Approx(1.5229).epsilon(1e-4));
  const auto r9 = full_period_rep_identity(t, reps, omega, 9);
  CHECK(r9.integral == 0.0);
  CHECK(r9.direct == 0.0);
  const auto p = make_params(c11, 100, 100);
  CHECK(full_period_rep_identity(p, 5).integral == doctest::Approx(r5.integral));
}

TEST_CASE("full period identity equals brute force enumeration") {
  const auto t = prime_floor_table(c11, 400);
  const auto reps = build_rep_table(c11, 400);
  for (std::int64_t n = 4; n <= 400; n += 7) {
    const auto r = full_period_rep_identity(t, reps, 0.07, n);
    const double b = brute_rw(n);
    CHECK(r.integral == doctest::Approx(b).epsilon(1e-12));
    CHECK(r.direct == doctest::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("Parseval anchor") {
  for (const std::int64_t M : {10, 1000, 20000}) {
    const auto t = prime_floor_table(c11, M);
    double diag = 0.0;
    for (const auto p : t.primes) diag += std::pow(std::log(static_cast<double>(p)), 2);
    CHECK(parseval_sum(t) == doctest::Approx(diag).epsilon(1e-13));
    CHECK(full_period_square_moment(t, -0.05) == doctest::Approx(diag).epsilon(1e-12));
  }
}

TEST_CASE("quadrature over a full period reproduces Parseval") {
  const auto t = prime_floor_table(c11, 2000);
  const double step = 1.0 / (16.0 * (2.0 * t.floors.back() + 2000));
  const auto g = make_grid(-0.05, 0.95, step);
  const auto m = minor_arc_moment(t, 2, g);
  CHECK(m.value == doctest::Approx(parseval_sum(t)).epsilon(1e-4));
  CHECK(m.rel_diff < kGridTolerance);
  const auto empty = prime_floor_table(c11, 1);
  CHECK(minor_arc_moment(empty, 4, g).value == 0.0);
}

TEST_CASE("coarse grids are rejected") {
  const auto t = prime_floor_table(c11, 5000);
  CHECK_THROWS_AS(minor_arc_moment(t, 4, make_grid(0.1, 0.9, 0.01)), GridTooCoarse);
}

TEST_CASE("major plus minor arc equals the representation count") {
  const auto p = make_params(c11, 2000, 2000);
  const auto t = prime_floor_table(p.c, p.bigM);
  const auto reps = build_rep_table(p.c, p.bigM);
  const MajorArcIntegral major(t, p.omega);
  const std::vector<std::int64_t> ns{1001, 1234, 1500, 1777, 2000};
  const auto minor = arc_integral_quadrature(t, ns, minor_arc_grid(p, t));
  for (std::size_t k = 0; k < ns.size(); ++k) {
    const double total = major(ns[k]).real() + minor.value[k].real();
    CHECK_MESSAGE(std::fabs(total - reps.Rw(ns[k])) <= 1e-4 * reps.Rw(ns[k]), "n=" << ns[k] << " total " << total
                                                                                     << " R_w " << reps.Rw(ns[k]));
    CHECK(std::fabs(minor.value[k].imag()) <= 1e-4 * reps.Rw(ns[k]));
  }
}

TEST_CASE("mean square over [B, 2B]") {
  const auto zero = CoefficientSeq::from_values(1, std::vector<cplx>(100, 0.0), 1.0);
  CHECK(mean_square_check(zero, c11, 0.25).lhs == 0.0);

  // c = 1 and a_n = 1: V is a Dirichlet kernel and the integral is explicit.
  const std::int64_t X = 300;
  const double B = 0.25;
  long double exact = static_cast<long double>(X) * B;
  for (std::int64_t d = 1; d < X; ++d) {
    const long double pd = std::numbers::pi_v<long double> * d;
    exact += 2.0L * (X - d) * (std::sin(4.0L * pd * B) - std::sin(2.0L * pd * B)) / (2.0L * pd);
  }
  const auto r1 = mean_square_check(CoefficientSeq::constant_one(1, X), Rational(1, 1), B);
  CHECK(r1.lhs == doctest::Approx(static_cast<double>(exact)).epsilon(1e-4));
  MESSAGE("c = 1 ratio: " << r1.ratio);

  const auto clipped = mean_square_check(CoefficientSeq::constant_one(1, 100), c11, 0.75);
  CHECK(clipped.clipped);
  CHECK(clipped.upper == 1.0);
  CHECK_THROWS_AS(mean_square_check(CoefficientSeq::constant_one(1, 100), c11, 1.5), DomainError);

  double worst = 0.0;
  const auto ones = CoefficientSeq::constant_one(1, 1000);
  for (int k = 1; k <= 10; ++k) {
    const auto r = mean_square_check(ones, c11, std::ldexp(1.0, -k));
    CHECK(r.rhs == doctest::Approx(1000.0 * r.B + std::pow(1000.0, 0.9) * std::log(1000.0)));
    worst = std::max(worst, r.ratio);
  }
  MESSAGE("largest mean-square ratio over B = 2^-k: " << worst);
  CHECK(worst < 2.0);
}

TEST_CASE("Bessel inequality") {
  const auto p = make_params(c11, 3000, 3000);
  const auto t = prime_floor_table(p.c, p.bigM);
  const auto reps = build_rep_table(p.c, p.bigM);
  const MajorArcIntegral major(t, p.omega);
  const auto m4 = minor_arc_moment(t, 4, minor_arc_grid(p, t));

  const auto none = bessel_link(major, reps, {}, m4.value);
  CHECK(none.sum_sq == 0.0);
  CHECK(none.holds);

  const std::vector<std::int64_t> one{2001};
  const auto single = bessel_link(major, reps, one, m4.value);
  CHECK(single.holds);

  std::mt19937_64 rng(21);
  std::vector<std::int64_t> ns;
  for (int i = 0; i < 50; ++i) ns.push_back(1501 + static_cast<std::int64_t>(rng() % 1500));
  const auto r = bessel_link(major, reps, ns, m4.value);
  CHECK(r.samples == 50u);
  CHECK(r.holds);
  CHECK(r.sum_sq <= m4.value * (1 + kGridTolerance));
}

}
