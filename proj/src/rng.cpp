#include "pdlc/rng.hpp"

namespace pdlc {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t state = root;
  std::uint64_t out = splitmix64_next(state);
  state = out ^ (stream * 0xD1B54A32D192ED03ULL + 0x9E3779B97F4A7C15ULL);
  return splitmix64_next(state);
}

double UniformRng::next_unit() {
  // Top 53 bits scaled by 2^-53; exact in double precision.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double UniformRng::next_uniform(double lo, double hi) {
  return lo + (hi - lo) * next_unit();
}

bool UniformRng::next_coin(double p_true) { return next_unit() < p_true; }

}  // namespace pdlc
