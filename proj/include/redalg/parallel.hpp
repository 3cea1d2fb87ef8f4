// Minimal work splitting for sweeps over independent inputs.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace redalg {

// REDALG_THREADS, or the hardware concurrency capped at 8.
inline int thread_count() {
  if (const char* env = std::getenv("REDALG_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  int hw = int(std::thread::hardware_concurrency());
  return std::clamp(hw, 1, 8);
}

// Calls f(i) for i in [0, count); the first exception is rethrown.
template <class F>
void parallel_for(std::size_t count, F&& f, int threads = thread_count()) {
  threads = std::max(1, std::min<int>(threads, int(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next++;
        if (i >= count) return;
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace redalg
