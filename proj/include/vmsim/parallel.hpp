#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace vmsim {

inline int default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Static contiguous partition of [0, n). Each worker touches a disjoint index
// range, so results do not depend on the worker count. fn(worker, begin, end)
// is called once per nonempty chunk; chunk 0 runs on the calling thread.
template <class Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
  if (threads < 1) threads = 1;
  if (n == 0) return;
  std::size_t t = static_cast<std::size_t>(threads);
  if (t > n) t = n;
  if (t == 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::size_t chunk = n / t;
  std::size_t rem = n % t;
  auto bounds = [chunk, rem](std::size_t w) {
    std::size_t begin = w * chunk + (w < rem ? w : rem);
    std::size_t len = chunk + (w < rem ? 1 : 0);
    return std::pair<std::size_t, std::size_t>{begin, begin + len};
  };
  std::vector<std::thread> pool;
  pool.reserve(t - 1);
  for (std::size_t w = 1; w < t; ++w) {
    auto [b, e] = bounds(w);
    pool.emplace_back([&fn, w, b, e] { fn(w, b, e); });
  }
  auto [b0, e0] = bounds(0);
  fn(std::size_t{0}, b0, e0);
  for (auto& th : pool) th.join();
}

}  // namespace vmsim
