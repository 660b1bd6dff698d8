#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "salab/field.hpp"
#include "salab/report.hpp"

namespace salab {

struct ExperimentGrid {
  enum class Mode { exhaustive, sample };

  FieldSpec field = FieldSpec::prime(3);
  int n_min = 2;
  int n_max = 2;
  std::vector<int> degrees{2};
  Mode mode = Mode::exhaustive;
  std::size_t samples = 1000;      ///< instances per n in sample mode
  std::int64_t coeff_bound = 5;    ///< sample-mode coefficient range (QQ)
  std::uint64_t seed = 0;
  std::size_t cap = 1000000;
  int m_max = -1;                  ///< -1: 2 * max degree + n
  bool reverse_order = false;      ///< exhaustive mode: walk instances last to first
};

/// Worker count: SALAB_THREADS when set and positive, else hardware concurrency.
std::size_t worker_count();

/// fn(i) for i in [0, count), on a worker pool; results in index order.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(count);
  const std::size_t workers = std::max<std::size_t>(1, std::min(worker_count(), count));
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

/// Distinct Hilbert functions of (f_1..f_r) with deg f_i = degrees[i], per n.
Json enumerate_hilbert_functions(const ExperimentGrid& grid);

/// (nu, regular) statistics over quadric tuples, per n.
Json explore_threshold(const ExperimentGrid& grid);

}  // namespace salab
