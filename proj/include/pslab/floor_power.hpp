#pragma once

#include <cstdint>
#include <vector>

#include "pslab/rational.hpp"

namespace pslab {

struct FloorPower {
  std::int64_t n = 1;
  Rational c;
  std::int64_t value = 1;  // [n^c]
  bool certified = false;
  int precision_bits = 0;  // 0 when resolved as an exact b-th power
};

struct FloorPowOptions {
  // Interval precisions tried in order before giving up.
  std::vector<int> ladder{64, 128, 256, 1024};
};

// Exact floor of n^(a/b). Either n is a perfect b-th power and the value is
// returned directly, or n^c is enclosed in a directed-rounding interval whose
// precision is raised along the ladder until it contains no integer.
// Throws CertificationError when the ladder is exhausted, DomainError for
// n < 1 or c <= 0.
FloorPower floor_pow(std::int64_t n, const Rational& c, const FloorPowOptions& opts = {});

// [n^c] for n = lo..hi (index 0 holds lo). Every entry is certified.
std::vector<std::int64_t> floor_pow_range(std::int64_t lo, std::int64_t hi, const Rational& c);

// Primes p with [p^c] <= max_value together with their floors and log p.
// With max_value = M this is exactly the range p <= M^(1/c).
struct PrimeFloorTable {
  Rational c;
  std::int64_t max_value = 0;
  std::vector<std::int64_t> primes;
  std::vector<std::int64_t> floors;  // strictly increasing for c > 1
  std::vector<double> weights;       // log p

  std::size_t size() const { return primes.size(); }
  double weight_sum() const;
};

PrimeFloorTable prime_floor_table(const Rational& c, std::int64_t max_value);

}  // namespace pslab
