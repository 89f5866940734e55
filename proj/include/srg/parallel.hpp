#pragma once

// Data-parallel kernels. Every kernel takes an Execution tag; the serial
// path is the reference implementation and the OpenMP path must produce
// identical results (results are always merged in input order).

#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <type_traits>
#include <vector>

namespace srg {

enum class Execution { serial, parallel };

/// Number of OpenMP threads used by Execution::parallel. Initialized from the
/// SRG_THREADS environment variable when set.
int thread_count();
void set_thread_count(int n);
void init_threads_from_env();

template <class In, class F>
auto map_items(std::span<const In> items, F&& f, Execution ex) {
  using R = std::decay_t<std::invoke_result_t<F&, const In&>>;
  std::vector<R> out(items.size());
  if (ex == Execution::serial || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
    return out;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(items[static_cast<std::size_t>(i)]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

template <class In, class F>
auto map_items(const std::vector<In>& items, F&& f, Execution ex) {
  return map_items(std::span<const In>(items), std::forward<F>(f), ex);
}

/// Maps every item to a value and folds the results left to right with `merge`.
template <class In, class F, class Acc, class Merge>
Acc map_reduce(const std::vector<In>& items, F&& f, Acc init, Merge&& merge, Execution ex) {
  auto parts = map_items(items, std::forward<F>(f), ex);
  for (auto& p : parts) merge(init, std::move(p));
  return init;
}

}  // namespace srg
