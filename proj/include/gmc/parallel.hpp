#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gmc {

/// Worker count: `requested` if > 0, else the GMC_WORKERS environment
/// variable, else hardware concurrency.
int resolve_workers(int requested);

/// Splits [0, total) into chunks whose boundaries depend only on `total`
/// (and the min_chunk hint), never on the worker count. Merging per-chunk
/// results in chunk order therefore gives bit-identical output for any
/// number of workers. min_chunk = 1 suits loops whose items are expensive.
std::vector<std::pair<std::int64_t, std::int64_t>> fixed_chunks(std::int64_t total,
                                                                std::int64_t min_chunk = 256);

namespace detail {
void run_chunked_impl(std::int64_t total, int workers,
                      const std::vector<std::pair<std::int64_t, std::int64_t>>& chunks,
                      void* ctx, void (*body)(void*, std::size_t, std::int64_t, std::int64_t));
}

/// Runs `body(chunk_index, begin, end)` over the fixed chunking of
/// [0, total) with `workers` threads. The caller stores per-chunk results
/// indexed by chunk_index and merges them in order afterwards.
template <typename Body>
void for_each_chunk(std::int64_t total, int workers, Body&& body,
                    std::int64_t min_chunk = 256) {
  auto chunks = fixed_chunks(total, min_chunk);
  auto thunk = [](void* ctx, std::size_t ci, std::int64_t b, std::int64_t e) {
    (*static_cast<Body*>(ctx))(ci, b, e);
  };
  detail::run_chunked_impl(total, workers, chunks, &body, thunk);
}

std::size_t chunk_count(std::int64_t total, std::int64_t min_chunk = 256);

}  // namespace gmc
