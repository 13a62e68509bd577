// Seed derivation for replicated experiments. Each replication owns an
// mt19937_64 stream whose seed comes from splitmix64 applied to
// (base_seed + replication index), the scheme echoed in the summary JSON so
// any single trajectory can be regenerated in isolation.

#ifndef ASCLT_RNG_HPP
#define ASCLT_RNG_HPP

#include <cstdint>
#include <random>

namespace asclt {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t replication) {
  return splitmix64(base_seed + replication);
}

using RngStream = std::mt19937_64;

inline RngStream make_stream(std::uint64_t base_seed, std::uint64_t replication) {
  return RngStream(derive_seed(base_seed, replication));
}

}  // namespace asclt

#endif
