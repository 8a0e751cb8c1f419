#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fdup {

inline unsigned effective_jobs(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/// Runs fn(i) for i in [0, n). Each index must write only its own output slot,
/// so results are identical for any job count.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = effective_jobs(jobs);
  if (n == 0) return;
  if (jobs <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (jobs > n) jobs = static_cast<unsigned>(n);

  std::vector<std::thread> workers;
  workers.reserve(jobs);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t begin = n * w / jobs;
    const std::size_t end = n * (w + 1) / jobs;
    workers.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fdup
