#pragma once
// Deterministic, toolchain-independent randomness. Back-off draws are
// derived from (seed, instance id) alone, so evaluation order and
// platform cannot change results. std::uniform_int_distribution is
// implementation-defined and is deliberately not used.

#include <cstdint>
#include <string_view>

namespace sense_reduce {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Uniform draw in [0, k) keyed by (seed, id). Multiply-high reduction;
// bias is O(k / 2^64).
inline uint64_t draw_index(uint64_t seed, std::string_view id, uint64_t k) {
  uint64_t h = splitmix64(splitmix64(seed) ^ fnv1a64(id));
  return static_cast<uint64_t>((static_cast<__uint128_t>(h) * k) >> 64);
}

}  // namespace sense_reduce
