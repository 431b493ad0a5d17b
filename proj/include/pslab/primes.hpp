#pragma once

#include <cstdint>
#include <vector>

namespace pslab {

// All primes <= limit, ascending. Immutable once built.
struct PrimeTable {
  std::int64_t limit = 0;
  std::vector<std::int64_t> primes;
  double chebyshev_theta = 0.0;  // sum of log p over the table

  std::size_t count() const { return primes.size(); }
};

// Segmented sieve of Eratosthenes; limit < 2 gives an empty table.
// Segments are processed in parallel, the result does not depend on the
// thread count.
PrimeTable sieve_primes(std::int64_t limit);

// Plain boolean sieve up to limit, index n -> is n prime.
std::vector<bool> prime_flags(std::int64_t limit);

}  // namespace pslab
