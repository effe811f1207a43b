#pragma once

// Deterministic parallel helpers. Work is always partitioned independently of the
// thread count and reduced in a fixed order, so results are bit-identical for any
// number of threads.

#include <cstddef>
#include <functional>
#include <span>

namespace ramsey {

// Defaults to $RAMSEY_THREADS, else 1.
unsigned thread_count();
void set_thread_count(unsigned threads);

// Runs body(i) for i in [0, n). Each index is handled exactly once; the first
// exception (lowest index) is rethrown after all threads join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Fixed-shape pairwise tree reduction.
double pairwise_sum(std::span<const double> values);

}  // namespace ramsey
