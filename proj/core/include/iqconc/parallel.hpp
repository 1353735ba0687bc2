#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace iqconc {

/// Index-parallel map used by the Monte Carlo and grid-search code.
///
/// `for_each_index(n, f)` calls `f(i)` exactly once for every i in [0, n).
/// Work is split into contiguous blocks, one per worker. Callers must write
/// results into per-index slots and reduce afterwards, so the outcome never
/// depends on the number of workers or on scheduling.
class Executor {
 public:
  Executor() = default;
  explicit Executor(unsigned workers) : workers_(std::max(1u, workers)) {}

  static Executor hardware() {
    return Executor(std::max(1u, std::thread::hardware_concurrency()));
  }

  unsigned workers() const { return workers_; }

  template <typename F>
  void for_each_index(std::size_t n, F&& f) const {
    const std::size_t w = std::min<std::size_t>(workers_, n);
    if (w <= 1) {
      for (std::size_t i = 0; i < n; ++i) f(i);
      return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    {
      std::vector<std::jthread> pool;
      pool.reserve(w);
      for (std::size_t k = 0; k < w; ++k) {
        const std::size_t begin = n * k / w;
        const std::size_t end = n * (k + 1) / w;
        pool.emplace_back([&, begin, end] {
          try {
            for (std::size_t i = begin; i < end; ++i) f(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
  }

 private:
  unsigned workers_ = 1;
};

}  // namespace iqconc
