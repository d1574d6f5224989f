#ifndef MOTO_PARALLEL_H_
#define MOTO_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace moto {

// Calls fn(i) for every i in [0, n) on up to `workers` threads. Work is
// handed out one index at a time, so fn must only write state owned by i.
// The first exception thrown by any call is rethrown on the caller.
template <typename Fn>
void ParallelFor(std::size_t n, unsigned workers, Fn&& fn) {
  const std::size_t threads =
      std::min<std::size_t>(std::max(1u, workers), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(body);
  body();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace moto

#endif  // MOTO_PARALLEL_H_
