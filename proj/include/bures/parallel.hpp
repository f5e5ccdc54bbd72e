#pragma once

// Deterministic fan-out over index ranges.
//
// Work is split into fixed-size chunks whose boundaries do not depend on the worker
// count; partial results are stored per chunk and combined pairwise in index order.
// The result is therefore bit-identical for any number of workers.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace bures {

// Pairwise (cascade) sum in index order.
inline double pairwise_sum(std::vector<double> values) {
  if (values.empty()) return 0.0;
  while (values.size() > 1) {
    std::size_t half = 0;
    for (std::size_t i = 0; i + 1 < values.size(); i += 2) values[half++] = values[i] + values[i + 1];
    if (values.size() % 2 == 1) values[half++] = values.back();
    values.resize(half);
  }
  return values.front();
}

// Runs task(chunk_index) for chunk_index in [0, chunks) on up to `workers` threads.
template <class Task>
void for_each_chunk(std::size_t chunks, int workers, Task&& task) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) task(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) task(c);
  };
  std::vector<std::jthread> pool;
  pool.reserve(std::min(threads, chunks) - 1);
  for (std::size_t t = 1; t < std::min(threads, chunks); ++t) pool.emplace_back(run);
  run();
}

// Sum of chunk_sum(begin, end) over [0, count) split into chunks of chunk_size.
template <class ChunkSum>
double ordered_sum(std::size_t count, std::size_t chunk_size, int workers, ChunkSum&& chunk_sum) {
  const std::size_t chunks = (count + chunk_size - 1) / chunk_size;
  std::vector<double> partial(chunks, 0.0);
  for_each_chunk(chunks, workers, [&](std::size_t c) {
    const std::size_t begin = c * chunk_size;
    partial[c] = chunk_sum(begin, std::min(count, begin + chunk_size));
  });
  return pairwise_sum(std::move(partial));
}

}  // namespace bures
