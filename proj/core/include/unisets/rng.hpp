#pragma once

#include <cstdint>
#include <random>

namespace unisets {

/// Deterministic, splittable random source.
///
/// All randomness in a run flows from one 64-bit seed. `split(stream)` derives an
/// independent child generator so that sub-operations can consume randomness
/// without perturbing each other's streams. Draws are built from raw engine
/// output rather than <random> distributions, whose results vary between
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  Rng split(std::uint64_t stream) const;

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace unisets
