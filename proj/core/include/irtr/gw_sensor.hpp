#pragma once

#include <vector>

namespace irtr {

/// Detuned-cavity operating point. The three frequencies must share one unit
/// (the incompatibility depends only on their ratios); norm is the
/// user-supplied amplitude normalization of the device.
struct DetunedConfig {
  double signal_freq;       ///< Omega > 0
  double detuning;          ///< Delta >= 0
  double bandwidth;         ///< gamma > 0
  double integration_time;  ///< T > 0
  double norm;              ///< N > 0
};

/// Sensitivity pair S = sqrt(variance * T) / norm per axis.
struct SensitivityPoint {
  double s_a, s_b;
};

/// Incompatibility produced by the detuning:
/// 2 Delta Omega / (gamma^2 + Delta^2 + Omega^2), always in [0, 1].
double mu_detuned(const DetunedConfig& cfg);

/// Tradeoff boundary at mu_detuned(cfg) mapped to sensitivity units.
/// Degenerates to the single optimal point at Delta = 0.
std::vector<SensitivityPoint> sensitivity_frontier(const DetunedConfig& cfg,
                                                   int n);

/// Optimal sensitivity of each parameter measured alone:
/// sqrt(T/2) / norm on both axes.
SensitivityPoint individual_qcrb_sensitivity(const DetunedConfig& cfg);

}  // namespace irtr
