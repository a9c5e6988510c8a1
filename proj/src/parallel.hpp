#ifndef KELC_SRC_PARALLEL_HPP_
#define KELC_SRC_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kelc::detail {

inline unsigned ResolveThreads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(shard, worker) for shard in [0, shard_count). Workers pull shard
// indices from a shared counter; the first exception is rethrown.
template <class Fn>
void RunShards(std::uint64_t shard_count, unsigned threads, Fn&& fn) {
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(ResolveThreads(threads), std::max<std::uint64_t>(shard_count, 1)));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&](unsigned id) {
    try {
      for (std::uint64_t shard = next++; shard < shard_count; shard = next++) fn(shard, id);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = shard_count;
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace kelc::detail

#endif  // KELC_SRC_PARALLEL_HPP_
