#pragma once

// Deterministic chunked reduction: work is split into a fixed number of
// chunks (independent of the thread count), each chunk is summed
// sequentially, and the chunk sums are combined by pairwise tree reduction.
// Results are therefore bit-stable no matter how many workers run.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace zetagap::parallel {

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/// Applies chunk_sum(begin, end) over [0, count) split into at most
/// kChunks ranges and tree-reduces the partial sums.
template <typename ChunkSum>
double chunked_sum(std::size_t count, unsigned threads, ChunkSum chunk_sum) {
  constexpr std::size_t kChunks = 64;
  if (count == 0) return 0.0;
  const std::size_t chunks = std::min(kChunks, count);
  const std::size_t per = (count + chunks - 1) / chunks;

  std::vector<double> partial(chunks, 0.0);
  const unsigned workers = std::min<std::size_t>(resolve_threads(threads), chunks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < chunks; ++i)
      partial[i] = chunk_sum(i * per, std::min(count, (i + 1) * per));
  } else {
    std::vector<std::future<void>> futures;
    std::atomic<std::size_t> next{0};
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&]() {
        for (std::size_t i = next.fetch_add(1); i < chunks; i = next.fetch_add(1))
          partial[i] = chunk_sum(i * per, std::min(count, (i + 1) * per));
      }));
    }
    for (auto& f : futures) f.get();
  }

  // pairwise tree reduction, fixed association
  std::size_t width = chunks;
  while (width > 1) {
    const std::size_t half = (width + 1) / 2;
    for (std::size_t i = 0; i + half < width; ++i) partial[i] += partial[i + half];
    width = half;
  }
  return partial[0];
}

}  // namespace zetagap::parallel
