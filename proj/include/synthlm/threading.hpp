#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace synthlm {

/// Splits [0, n) into contiguous chunks, one per worker. Work items must
/// be independent; callers merge per-chunk results in chunk order so the
/// outcome does not depend on the thread count.
inline void parallel_chunks(
    std::uint64_t n, int threads,
    const std::function<void(std::uint64_t begin, std::uint64_t end, int chunk)>& fn) {
  if (threads < 1) threads = 1;
  if (threads == 1 || n <= 1) {
    fn(0, n, 0);
    return;
  }
  const std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t per = (n + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * per;
    const std::uint64_t end = std::min(n, begin + per);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end, w] { fn(begin, end, static_cast<int>(w)); });
  }
  for (auto& t : pool) t.join();
}

/// Default thread count: SYNTHLM_THREADS env var, else 1.
int default_threads();

}  // namespace synthlm
