#pragma once

#include <cstdint>
#include <random>

namespace retroqst {

using Rng = std::mt19937_64;

// Counter-based seed derivation (splitmix64 finalizer) so that streams for
// trial i are independent of execution order and of each other.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t counter) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace retroqst
