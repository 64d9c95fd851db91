#pragma once

#include "plumb/qseries.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace plumb {

/// 0 means "use the hardware concurrency". PLUMB_THREADS, when set to a positive integer, caps
/// the result.
inline unsigned resolve_threads(unsigned requested) {
  unsigned n = requested > 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PLUMB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

/// Runs body(i, sink) for i in [0, count) on up to `threads` workers; each worker owns a sink
/// of the given order and the sinks are merged by addition. The first exception is rethrown.
template <class Body>
QSeries parallel_series_sum(std::size_t count, unsigned threads, const Rational& order, Body body) {
  const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1));
  std::vector<QSeries> sinks(workers, QSeries(order));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](std::size_t w) {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i, sinks[w]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  QSeries total(order);
  for (const auto& s : sinks) total = add(total, s);
  return total;
}

}  // namespace plumb
