// parallel.hpp -- dynamic block scheduling over an index range.  Workers
// grab fixed-size blocks from an atomic counter; the callback must be
// thread-safe for anything it writes.

#ifndef DPC_PARALLEL_HPP
#define DPC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace dpc {

inline int effective_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc != 0 ? static_cast<int>(hc) : 1;
}

template <class Fn>
void parallel_blocks(std::uint64_t count, int threads, std::uint64_t block, Fn fn) {
  threads = effective_threads(threads);
  if (block == 0) block = 1;
  if (threads <= 1 || count <= block) {
    if (count > 0) fn(std::uint64_t(0), count);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(block);
      if (begin >= count) return;
      fn(begin, std::min(begin + block, count));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace dpc

#endif
