#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dmfh {

// splitmix64 finalizer; used to derive independent child seeds from
// (master seed, scenario id, realization index, purpose tag).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a, stable across platforms and runs.
inline std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t scenario_hash,
                                 std::uint64_t realization, std::uint64_t purpose) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ scenario_hash);
  h = mix64(h ^ realization);
  return mix64(h ^ purpose);
}

using Rng = std::mt19937_64;

}  // namespace dmfh
