#pragma once

#include <cstdint>
#include <initializer_list>

namespace qwalk {

// Counter-based randomness: every draw is a pure function of a key and a
// tuple of counters, so streams can be split and consumed in any order.
namespace rng {

// SplitMix64 finalizer.
constexpr std::uint64_t Mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t Combine(std::uint64_t key, std::uint64_t counter) noexcept {
  return Mix(key ^ Mix(counter ^ 0x5851f42d4c957f2dULL));
}

constexpr std::uint64_t Hash(std::uint64_t key,
                             std::initializer_list<std::uint64_t> counters) noexcept {
  std::uint64_t h = Mix(key);
  for (std::uint64_t c : counters) h = Combine(h, c);
  return h;
}

// Signed lattice coordinates are folded into the counter space bijectively.
constexpr std::uint64_t Counter(std::int64_t v) noexcept {
  return static_cast<std::uint64_t>(v);
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double ToUnit(std::uint64_t h) noexcept {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by multiply-shift; bias is below 2^-60 for n <= 16.
__extension__ using Uint128 = unsigned __int128;

constexpr std::uint64_t ToBelow(std::uint64_t h, std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>((static_cast<Uint128>(h) * n) >> 64);
}

}  // namespace rng
}  // namespace qwalk
