#include "wolffd/common.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace wolffd {

namespace {
std::atomic<unsigned> g_thread_cap{0};
}

void set_thread_cap(unsigned n) { g_thread_cap.store(n); }

unsigned thread_cap() {
  unsigned cap = g_thread_cap.load();
  if (cap == 0) cap = std::max(1u, std::thread::hardware_concurrency());
  return cap;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::min<std::size_t>(thread_cap(), n);
  if (workers <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<std::size_t> next{0};
  const std::size_t chunk = std::max<std::size_t>(1, n / (4 * workers));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t begin = next.fetch_add(chunk);
        if (begin >= n) return;
        std::size_t end = std::min(n, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace wolffd
