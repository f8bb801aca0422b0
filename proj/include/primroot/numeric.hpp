#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace primroot {

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Blockwise reduction with a fixed block size: each block is accumulated
// sequentially in index order and block partials are combined in block order,
// so the result is independent of the number of worker threads.
inline constexpr std::size_t kReduceBlockSize = std::size_t{1} << 14;

template <class T, class Term>
T blockwise_sum(std::size_t n, Term&& term) {
  const std::size_t nblocks = (n + kReduceBlockSize - 1) / kReduceBlockSize;
  std::vector<T> partial(nblocks, T{});
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlockSize;
    const std::size_t hi = lo + kReduceBlockSize < n ? lo + kReduceBlockSize : n;
    T acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  T total{};
  for (const T& x : partial) total += x;
  return total;
}

}  // namespace primroot
