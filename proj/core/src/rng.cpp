#include "irtr/rng.hpp"

#include <cmath>
#include <numbers>

#include "irtr/errors.hpp"

namespace irtr {

std::uint64_t RngState::next_u64() {
  // splitmix64 (Steele, Lea, Flood 2014): a Weyl sequence through a mixer.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double RngState::next_unit() {
  // Top 53 bits, shifted into (0, 1] so the log below never sees zero.
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double sample_gaussian(RngState& rng, double mean, double variance) {
  if (!(variance > 0.0))
    throw InvalidVariance("sample_gaussian: variance must be positive");
  const double u1 = rng.next_unit();
  const double u2 = rng.next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + std::sqrt(variance) * r *
                    std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace irtr
