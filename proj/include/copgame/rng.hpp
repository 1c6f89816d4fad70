#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace copgame {

// Deterministic, seedable and splittable random source.
//
// Raw bits come from std::mt19937_64, whose output sequence is fixed by the
// standard. Seeds are whitened with SplitMix64, and the conversions to doubles
// and bounded integers are done here rather than through <random>
// distributions (whose outputs are implementation-defined). Any
// implementation of the same three pieces reproduces the same streams.
class Rng {
public:
  static constexpr std::string_view kAlgorithm = "mt19937_64+splitmix64-seed/v1";

  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % bound;
    }
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Independent child stream; children of one parent never collide for distinct ids.
  Rng split(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
  }

  std::uint64_t seed() const { return seed_; }

  static constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace copgame
