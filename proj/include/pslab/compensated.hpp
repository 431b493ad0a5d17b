#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace pslab {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

// Sums fn(i) for i in [0, count) in fixed blocks of `block` indices. Each
// block is compensated-summed on whatever thread picks it up; the block
// results are then combined in block order, so the value is bitwise
// independent of the thread count.
template <class Fn>
std::complex<double> blocked_sum(std::int64_t count, Fn&& fn, std::int64_t block = 4096) {
  if (count <= 0) return {0.0, 0.0};
  const std::int64_t nblocks = (count + block - 1) / block;
  std::vector<std::complex<double>> partial(nblocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    CompensatedComplexSum acc;
    const std::int64_t hi = std::min(count, (b + 1) * block);
    for (std::int64_t i = b * block; i < hi; ++i) acc.add(fn(i));
    partial[b] = acc.value();
  }
  CompensatedComplexSum total;
  for (const auto& p : partial) total.add(p);
  return total.value();
}

}  // namespace pslab
