#include "irtr/model.hpp"

#include <cmath>
#include <numbers>

#include "irtr/errors.hpp"

namespace irtr {

SignalParams SignalParams::from_physical(double a, double b, double norm) {
  if (!(norm >= 0.0))
    throw InvalidArgument("SignalParams: norm must be non-negative");
  return {a, b, norm * a, norm * b};
}

SignalParams SignalParams::from_rescaled(double a_resc, double b_resc,
                                         double norm) {
  if (!(norm > 0.0))
    throw InvalidArgument("SignalParams: norm must be positive");
  return {a_resc / norm, b_resc / norm, a_resc, b_resc};
}

EncodingParams encoding_from_device(const DeviceResponse& dev) {
  const double mag2 = std::norm(dev.chi_x) + std::norm(dev.chi_p);
  if (mag2 <= 0.0)
    throw DegenerateDevice(
        "encoding_from_device: both susceptibilities vanish");
  if (!(dev.integration_time > 0.0))
    throw InvalidArgument(
        "encoding_from_device: integration time must be positive");

  const double pi_t = std::numbers::pi * dev.integration_time;
  const double norm2 = pi_t * mag2;
  const double raw =
      2.0 * pi_t / norm2 *
      (dev.chi_p.real() * dev.chi_x.imag() -
       dev.chi_x.real() * dev.chi_p.imag());

  double mu = std::abs(raw);
  // Bounded by 1 in exact arithmetic (AM-GM); allow rounding slack only.
  if (mu > 1.0 + 1e-12)
    throw InvalidArgument(
        "encoding_from_device: incompatibility exceeds 1 beyond rounding");
  mu = std::min(mu, 1.0);
  return {std::sqrt(norm2), mu, raw < 0.0 ? -1 : +1};
}

TwoModeCoherentState encode_state(const EncodingParams& enc,
                                  const SignalParams& sig) {
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  return {
      std::complex<double>(sig.a_resc, enc.mu * sig.b_resc) * inv_sqrt2,
      std::complex<double>(
          std::sqrt(1.0 - enc.mu * enc.mu) * sig.b_resc * inv_sqrt2, 0.0),
  };
}

}  // namespace irtr
