#pragma once

#include <cstdint>
#include <random>

namespace pdlc {

/// Advances a splitmix64 state and returns the next output word.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Derives the seed for an independent sub-stream from a root seed. Stream 0,
/// 1, 2, ... give unrelated generators; the mapping is fixed so that runs are
/// reproducible across platforms.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

/// Deterministic uniform source. The unit interval is assembled from the raw
/// 64-bit engine output (53-bit mantissa method) instead of
/// std::uniform_real_distribution, whose output is implementation-defined.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in [0, 1).
  double next_unit();

  /// Uniform draw in [lo, hi).
  double next_uniform(double lo, double hi);

  /// Bernoulli draw with success probability p_true.
  bool next_coin(double p_true);

 private:
  std::mt19937_64 engine_;
};

}  // namespace pdlc
