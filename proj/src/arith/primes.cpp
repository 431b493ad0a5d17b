#include "pslab/primes.hpp"

#include <algorithm>
#include <cmath>

namespace pslab {

std::vector<bool> prime_flags(std::int64_t limit) {
  if (limit < 2) return std::vector<bool>(std::max<std::int64_t>(limit + 1, 0), false);
  std::vector<bool> flags(limit + 1, true);
  flags[0] = flags[1] = false;
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    if (!flags[p]) continue;
    for (std::int64_t q = p * p; q <= limit; q += p) flags[q] = false;
  }
  return flags;
}

PrimeTable sieve_primes(std::int64_t limit) {
  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;

  const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<std::int64_t> base;
  {
    const auto flags = prime_flags(root);
    for (std::int64_t i = 2; i <= root; ++i)
      if (flags[i]) base.push_back(i);
  }

  constexpr std::int64_t kSegment = 1 << 18;
  const std::int64_t nseg = (limit + 1 + kSegment - 1) / kSegment;
  std::vector<std::vector<std::int64_t>> found(nseg);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t s = 0; s < nseg; ++s) {
    const std::int64_t lo = s * kSegment;
    const std::int64_t hi = std::min(lo + kSegment - 1, limit);
    std::vector<char> mark(hi - lo + 1, 1);
    for (const auto p : base) {
      if (p * p > hi) break;
      std::int64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::int64_t q = start; q <= hi; q += p) mark[q - lo] = 0;
    }
    auto& out = found[s];
    for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n)
      if (mark[n - lo]) out.push_back(n);
  }

  for (auto& seg : found) table.primes.insert(table.primes.end(), seg.begin(), seg.end());
  double theta = 0.0;
  for (const auto p : table.primes) theta += std::log(static_cast<double>(p));
  table.chebyshev_theta = theta;
  return table;
}

}  // namespace pslab
