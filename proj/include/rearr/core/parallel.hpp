#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace rearr {

// Runs fn(begin, end) over contiguous chunks of [0, n) on `workers` threads.
// Callers write results into index-addressed storage, so the output is
// independent of scheduling.
inline void parallel_for(size_t n, int workers,
                         const std::function<void(size_t, size_t)>& fn) {
  if (n == 0) return;
  if (workers <= 1 || n < 2) {
    fn(0, n);
    return;
  }
  const size_t w = std::min<size_t>(static_cast<size_t>(workers), n);
  const size_t chunk = (n + w - 1) / w;
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (size_t i = 0; i < w; ++i) {
    const size_t b = i * chunk;
    const size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : threads) t.join();
}

inline int default_workers() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace rearr
