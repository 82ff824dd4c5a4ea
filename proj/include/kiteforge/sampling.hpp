#pragma once

// Seeded sampling and deterministic sharding of sampled checks.
//
// A run of `count` samples under a master seed is cut into fixed-size shards.
// Shard s draws from its own generator seeded by derive_seed(seed, s), so the
// drawn values depend only on (seed, sample index), never on the number of
// worker threads.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace kiteforge {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kShardSize = 512;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t shard) {
  return splitmix64(splitmix64(master) ^ splitmix64(shard + 0x632be59bd9b4e019ULL));
}

/// Uniform integer in [lo, hi]; rejection sampling keeps it unbiased and
/// independent of the standard library's distribution implementation.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

/// Worker count from KITEFORGE_THREADS, else the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("KITEFORGE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs `task(i)` for i in [0, jobs) over the worker pool.
template <class Task>
void parallel_for(std::size_t jobs, Task&& task) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), jobs));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// First failing sample of a sharded run, with the payload the body reported.
template <class Witness>
struct ShardFailure {
  std::uint64_t index;
  Witness witness;
};

/// Runs `body(rng, index)` for every sample index. The body returns an empty
/// optional on success. Every sample is evaluated; the failure with the least
/// index is returned, so the outcome does not depend on scheduling.
template <class Witness, class Body>
std::optional<ShardFailure<Witness>> run_sharded(std::uint64_t count, std::uint64_t seed, Body&& body) {
  const std::uint64_t shards = (count + kShardSize - 1) / kShardSize;
  std::vector<std::optional<ShardFailure<Witness>>> first(shards);
  parallel_for(static_cast<std::size_t>(shards), [&](std::size_t s) {
    Rng rng(derive_seed(seed, s));
    const std::uint64_t begin = s * kShardSize;
    const std::uint64_t end = std::min(count, begin + kShardSize);
    for (std::uint64_t i = begin; i < end; ++i) {
      std::optional<Witness> w = body(rng, i);
      if (w && !first[s]) first[s] = ShardFailure<Witness>{i, std::move(*w)};
    }
  });
  for (auto& f : first)
    if (f) return std::move(f);
  return std::nullopt;
}

}  // namespace kiteforge
