#pragma once

// Reproducible random streams. Every sampler takes a stream explicitly; there
// is no global generator. Substreams are derived from a single 64-bit seed by
// splitmix64 key mixing, so replication k of experiment e always sees the same
// stream no matter how work is scheduled across threads.

#include <cstdint>
#include <random>

namespace maxdist {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using RngStream = std::mt19937_64;

/// Derive a deterministic substream from (seed, path ids).
template <class... Ids>
RngStream make_stream(std::uint64_t seed, Ids... ids) {
  std::uint64_t state = seed;
  std::uint64_t key = splitmix64(state);
  ((state ^= static_cast<std::uint64_t>(ids), key ^= splitmix64(state)), ...);
  return RngStream(key);
}

}  // namespace maxdist
