#include "ramsey/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ramsey {

namespace {

unsigned threads_from_env() {
  if (const char* env = std::getenv("RAMSEY_THREADS")) {
    try {
      long parsed = std::stol(env);
      if (parsed >= 1 && parsed <= 1024) return static_cast<unsigned>(parsed);
    } catch (...) {
    }
  }
  return 1;
}

std::atomic<unsigned>& thread_setting() {
  static std::atomic<unsigned> threads{threads_from_env()};
  return threads;
}

}  // namespace

unsigned thread_count() { return thread_setting().load(); }

void set_thread_count(unsigned threads) { thread_setting().store(threads == 0 ? 1 : threads); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += workers) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& thread : pool) thread.join();
  for (auto& error : errors)
    if (error) std::rethrow_exception(error);
}

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x))
    compensation_ += (sum_ - t) + x;
  else
    compensation_ += (x - t) + sum_;
  sum_ = t;
}

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() == 1) return values[0];
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace ramsey
