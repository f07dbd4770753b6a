#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace selt {

/// Runs task(shard, shard_count) on `jobs` threads and folds the results in
/// shard order with `merge`, so the outcome does not depend on scheduling.
template <class T, class Task, class Merge>
T parallel_reduce(int jobs, const Task& task, const Merge& merge, T init = T{}) {
  if (jobs <= 1) return merge(std::move(init), task(0, 1));
  std::vector<T> partial(static_cast<size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(jobs));
  for (int s = 0; s < jobs; ++s) {
    workers.emplace_back([&, s] {
      try {
        partial[static_cast<size_t>(s)] = task(s, jobs);
      } catch (...) {
        errors[static_cast<size_t>(s)] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T total = std::move(init);
  for (auto& p : partial) total = merge(std::move(total), std::move(p));
  return total;
}

inline std::uint64_t parallel_sum(int jobs, const std::function<std::uint64_t(int, int)>& task) {
  return parallel_reduce<std::uint64_t>(jobs, task,
                                        [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

/// Calls body(i) for i in [0, count) on `jobs` threads, handing out indices
/// dynamically.
inline void parallel_for(int jobs, std::size_t count, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
  std::vector<std::thread> workers;
  for (int s = 0; s < jobs; ++s) {
    workers.emplace_back([&, s] {
      try {
        for (std::size_t i = next++; i < count; i = next++) body(i);
      } catch (...) {
        errors[static_cast<size_t>(s)] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Default worker count: $SSL_JOBS when set to a positive integer, otherwise
/// the hardware concurrency.
int default_jobs();

}  // namespace selt
