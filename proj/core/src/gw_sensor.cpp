#include "irtr/gw_sensor.hpp"

#include <cmath>

#include "irtr/errors.hpp"
#include "irtr/tradeoff.hpp"

namespace irtr {

namespace {

void validate(const DetunedConfig& cfg) {
  if (!(cfg.signal_freq > 0.0) || !(cfg.bandwidth > 0.0) ||
      !(cfg.detuning >= 0.0) || !(cfg.integration_time > 0.0) ||
      !(cfg.norm > 0.0))
    throw InvalidArgument(
        "DetunedConfig: signal frequency, bandwidth, integration time and "
        "norm must be positive; detuning must be non-negative");
}

}  // namespace

double mu_detuned(const DetunedConfig& cfg) {
  validate(cfg);
  return 2.0 * cfg.detuning * cfg.signal_freq /
         (cfg.bandwidth * cfg.bandwidth + cfg.detuning * cfg.detuning +
          cfg.signal_freq * cfg.signal_freq);
}

std::vector<SensitivityPoint> sensitivity_frontier(const DetunedConfig& cfg,
                                                   int n) {
  const double mu = mu_detuned(cfg);
  const BoundaryCurve curve = boundary_curve(mu, n);
  std::vector<SensitivityPoint> out;
  out.reserve(curve.points.size());
  for (const ErrorPoint& pt : curve.points) {
    out.push_back({std::sqrt(pt.e_a * cfg.integration_time) / cfg.norm,
                   std::sqrt(pt.e_b * cfg.integration_time) / cfg.norm});
  }
  return out;
}

SensitivityPoint individual_qcrb_sensitivity(const DetunedConfig& cfg) {
  validate(cfg);
  const double s = std::sqrt(0.5 * cfg.integration_time) / cfg.norm;
  return {s, s};
}

}  // namespace irtr
