#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pslab/circle.hpp"
#include "pslab/errors.hpp"
#include "pslab/exceptional.hpp"
#include "pslab/floor_power.hpp"

using namespace pslab;

namespace {

// Ordered pair counts for n <= N from oracle floors.
std::vector<std::int64_t> brute_counts(std::int64_t a, std::int64_t b, std::int64_t N) {
  std::vector<std::int64_t> r(N + 1, 0);
  std::vector<std::int64_t> k;
  for (const auto p : oracle::primes_upto(N)) {
    const auto f = oracle::floor_pow(p, a, b);
    if (f <= N) k.push_back(f);
  }
  for (const auto x : k)
    for (const auto y : k)
      if (x + y <= N) ++r[x + y];
  return r;
}

}  // namespace

TEST_SUITE("exceptional") {

TEST_CASE("small representation tables") {
  const auto t = build_rep_table(Rational(11, 10), 20);
  CHECK(t.R(4) == 1);
  CHECK(t.R(5) == 2);
  CHECK(t.R(9) == 0);
  CHECK(t.Rw(5) == doctest::Approx(2 * std::log(2.0) * std::log(3.0)));

  const auto g = build_rep_table(Rational(1, 1), 20);
  CHECK(g.R(4) == 1);
  CHECK(g.R(5) == 2);
  CHECK(g.R(6) == 1);

  const auto minimal = build_rep_table(Rational(11, 10), 4);
  CHECK(minimal.R(4) == 1);
  CHECK_THROWS_AS(build_rep_table(Rational(11, 10), 3), DomainError);
}

TEST_CASE("tables agree with brute force") {
  for (const auto& c : {Rational(11, 10), Rational(6, 5), Rational(1, 1)}) {
    const std::int64_t N = 3000;
    const auto t = build_rep_table(c, N);
    const auto ref = brute_counts(c.num, c.den, N);
    for (std::int64_t n = 1; n <= N; ++n) {
      CHECK(t.R(n) == ref[n]);
      CHECK((t.Rw(n) == 0.0) == (t.R(n) == 0));
    }
  }
}

TEST_CASE("exceptional sets") {
  const auto e = exceptional_set(Rational(11, 10), 20, 4);
  CHECK(e.exceptional == std::vector<std::int64_t>{9, 12, 14, 17, 20});
  CHECK(e.density == doctest::Approx(5.0 / 20.0));

  const auto g = exceptional_set(Rational(1, 1), 20, 4);
  CHECK(g.exceptional == std::vector<std::int64_t>{11, 17});
  for (const auto n : g.exceptional) {
    CHECK(n % 2 == 1);
    CHECK_FALSE(oracle::is_prime(n - 2));
  }

  CHECK(exceptional_set(Rational(11, 10), 4, 4).exceptional.empty());
  CHECK_THROWS_AS(exceptional_set(Rational(11, 10), 20, 3), DomainError);
  CHECK_THROWS_AS(exceptional_set(Rational(11, 10), 20, 21), DomainError);
}

TEST_CASE("dyadic counts") {
  const auto e = exceptional_set(Rational(6, 5), 5000, 4);
  for (const auto& [M, Z] : e.dyadic_Z) {
    std::int64_t z = 0;
    for (const auto n : e.exceptional) z += (2 * n > M && n <= M);
    CHECK(Z == z);
  }
  CHECK(e.dyadic_Z.count(5000) == 1);
  CHECK(e.dyadic_Z.count(2500) == 1);
}

TEST_CASE("ordered pair symmetry") {
  const Rational c(11, 10);
  const std::int64_t N = 10000;
  const auto t = build_rep_table(c, N);
  const auto pf = prime_floor_table(c, N);
  std::vector<std::int64_t> unordered(N + 1, 0), diagonal(N + 1, 0);
  for (std::size_t i = 0; i < pf.size(); ++i) {
    if (2 * pf.floors[i] <= N) diagonal[2 * pf.floors[i]] = 1;
    for (std::size_t j = i + 1; j < pf.size(); ++j)
      if (pf.floors[i] + pf.floors[j] <= N) ++unordered[pf.floors[i] + pf.floors[j]];
  }
  for (std::int64_t n = 1; n <= N; ++n) {
    CHECK(t.R(n) == 2 * unordered[n] + diagonal[n]);
    CHECK(t.R(n) >= 0);
  }
}

TEST_CASE("coverage is monotone in N") {
  const Rational c(6, 5);
  const auto small = exceptional_set(c, 2000, 4);
  const auto large = build_rep_table(c, 20000);
  std::vector<std::int64_t> restricted;
  for (std::int64_t n = 4; n <= 2000; ++n)
    if (large.R(n) == 0) restricted.push_back(n);
  CHECK(restricted == small.exceptional);
  const auto mid = build_rep_table(c, 2000);
  for (std::int64_t n = 1; n <= 2000; ++n) CHECK(mid.Rw(n) == large.Rw(n));
}

TEST_CASE("weighted counts match the full period identity") {
  const auto p = make_params(Rational(11, 10), 5000, 5000);
  const auto t = prime_floor_table(p.c, p.bigM);
  const auto reps = build_rep_table(p.c, p.bigM);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto n = 1 + static_cast<std::int64_t>(rng() % 5000);
    const auto r = full_period_rep_identity(t, reps, p.omega, n);
    CHECK(std::fabs(r.integral - r.direct) <= 1e-9 * std::max(1.0, std::fabs(r.direct)));
  }
}

TEST_CASE("density trend") {
  const auto d = density_trend(Rational(11, 10), {1000, 10000, 100000});
  REQUIRE(d.rows.size() == 3);
  CHECK(d.non_increasing);
  for (std::size_t i = 1; i < d.rows.size(); ++i) CHECK(d.rows[i].density <= d.rows[i - 1].density);
  CHECK(d.theorem_exponent.has_value());
  CHECK(d.fitted_exponent.has_value());
  MESSAGE("fitted exponent " << *d.fitted_exponent << " against 1 - sigma = " << *d.theorem_exponent);

  const auto single = density_trend(Rational(11, 10), {5000});
  CHECK_FALSE(single.fitted_exponent.has_value());
  CHECK(single.rows.size() == 1);

  CHECK_THROWS_AS(density_trend(Rational(11, 10), {500}), DomainError);
  CHECK_THROWS_AS(density_trend(Rational(11, 10), {5000, 2000}), DomainError);

  const auto base = density_trend(Rational(1, 1), {1000, 10000});
  CHECK_FALSE(base.theorem_exponent.has_value());
  MESSAGE("c = 1 densities: " << base.rows[0].density << ", " << base.rows[1].density);
}

TEST_CASE("bound ratio report") {
  auto p = make_params(Rational(11, 10), 2000, 2000);
  BoundRatioOptions opts;
  opts.X_list = {1000.0, 2000.0};
  const auto rows = bound_ratio_report(p, opts);
  CHECK(rows.size() == 8u);
  for (const auto& r : rows) {
    CHECK(std::isfinite(r.ratio));
    CHECK(r.ratio > 0.0);
    CHECK(r.x >= p.omega);
    CHECK(r.x <= 1 - p.omega);
    CHECK(r.ratio == doctest::Approx(r.lhs / r.rhs));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rows[i].quantity == rows[i + 4].quantity);
    CHECK(rows[i + 4].ratio <= 2.0 * rows[i].ratio);
  }
  opts.X_list = {1000.0};
  opts.include_moment = true;
  const auto with = bound_ratio_report(p, opts);
  CHECK(with.back().quantity == "fourth_moment");
  CHECK(with.back().ratio > 0.0);
}

}
