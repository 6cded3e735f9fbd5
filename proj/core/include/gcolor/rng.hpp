#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gcolor {

/// splitmix64 finalizer; the stable 64-bit mixer behind every derived seed.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Order-sensitive combination of two seeds.
std::uint64_t mix_seeds(std::uint64_t a, std::uint64_t b) noexcept;

/// FNV-1a over bytes, for deriving seeds from identifiers.
std::uint64_t hash_string(std::string_view s) noexcept;

/// Random stream used throughout the library.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// maps raw draws to integers and reals with explicit arithmetic, so streams
/// are reproducible across standard-library implementations. The
/// <random> distributions make no such guarantee.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }

  result_type operator()() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01();

  bool bernoulli(double p) { return uniform01() < p; }

  /// Independent child stream; advances this stream by one draw.
  Rng split() { return Rng(splitmix64(engine_())); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gcolor
