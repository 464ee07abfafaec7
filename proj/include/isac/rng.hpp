#pragma once

#include <cstdint>
#include <random>

namespace isac {

// SplitMix64 finalizer. Used to derive independent streams and for
// counter-based per-slot draws.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

__extension__ using uint128 = unsigned __int128;

// Maps a 64-bit word onto [0, bound) by multiply-high. Bias is at most
// bound / 2^64, so this is only for hashed draws; Rng::below is exact.
constexpr std::uint64_t reduce(std::uint64_t word, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<uint128>(word) * bound) >> 64);
}

// Seeded random source. Bounded draws are implemented here rather than with
// <random> distributions so that results are identical across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  // Independent stream `stream` of the master seed (e.g. one per Monte Carlo run).
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix64(seed) ^ mix64(stream ^ 0x5851f42d4c957f2dULL));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace isac
