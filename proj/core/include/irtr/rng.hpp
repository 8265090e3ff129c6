#pragma once

#include <cstdint>

namespace irtr {

/// Deterministic pseudorandom generator (splitmix64). The same seed yields
/// the same stream on every platform. A generator is single-owner: parallel
/// sweeps must give each worker its own instance, seeded e.g. seed + index.
class RngState {
 public:
  explicit RngState(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in (0, 1], 53 random bits.
  double next_unit();

 private:
  std::uint64_t state_;
};

/// One normal draw via the Box-Muller transform. Consumes exactly two
/// uniforms per call, so streams stay aligned across runs.
///
/// Throws InvalidVariance unless variance > 0.
double sample_gaussian(RngState& rng, double mean, double variance);

}  // namespace irtr
