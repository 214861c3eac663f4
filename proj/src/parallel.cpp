#include "gmc/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace gmc {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GMC_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::pair<std::int64_t, std::int64_t>> fixed_chunks(std::int64_t total,
                                                                std::int64_t min_chunk) {
  std::vector<std::pair<std::int64_t, std::int64_t>> chunks;
  if (total <= 0) return chunks;
  // Chunk size depends on (total, min_chunk) only; 64 chunks max keeps
  // per-chunk accumulator memory bounded for matrix-valued statistics.
  std::int64_t size = (total + 63) / 64;
  if (size < min_chunk) size = min_chunk;
  if (size < 1) size = 1;
  for (std::int64_t b = 0; b < total; b += size)
    chunks.emplace_back(b, std::min(b + size, total));
  return chunks;
}

std::size_t chunk_count(std::int64_t total, std::int64_t min_chunk) {
  return fixed_chunks(total, min_chunk).size();
}

namespace detail {

void run_chunked_impl(std::int64_t total, int workers,
                      const std::vector<std::pair<std::int64_t, std::int64_t>>& chunks,
                      void* ctx, void (*body)(void*, std::size_t, std::int64_t, std::int64_t)) {
  (void)total;
  if (chunks.empty()) return;
  int nw = resolve_workers(workers);
  if (nw <= 1 || chunks.size() == 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i)
      body(ctx, i, chunks[i].first, chunks[i].second);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= chunks.size()) return;
      body(ctx, i, chunks[i].first, chunks[i].second);
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(nw, static_cast<int>(chunks.size()));
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace detail
}  // namespace gmc
