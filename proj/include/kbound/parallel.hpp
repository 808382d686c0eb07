#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace kbound {

/// Evaluates f(i) for every i in [lo, hi] and returns the results in index order.
/// Work is split into contiguous chunks over at most `jobs` threads; the output
/// does not depend on the thread count. The first exception thrown by f is rethrown.
template <class F>
auto parallel_map(std::int64_t lo, std::int64_t hi, unsigned jobs, F&& f)
    -> std::vector<std::invoke_result_t<F&, std::int64_t>> {
  using R = std::invoke_result_t<F&, std::int64_t>;
  std::vector<R> out;
  if (hi < lo) return out;
  const std::int64_t n = hi - lo + 1;
  out.resize(static_cast<std::size_t>(n));
  const std::int64_t workers = std::clamp<std::int64_t>(jobs, 1, std::max<std::int64_t>(1, n / 64));
  if (workers == 1) {
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(lo + i);
    return out;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (std::int64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::int64_t begin = n * w / workers, end = n * (w + 1) / workers;
      try {
        for (std::int64_t i = begin; i < end; ++i) out[static_cast<std::size_t>(i)] = f(lo + i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace kbound
