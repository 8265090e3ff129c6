#pragma once

#include <complex>

namespace irtr {

/// Linear response of the device to the signal at its frequency, plus the
/// integration time that sets the overall scale of the encoding.
struct DeviceResponse {
  std::complex<double> chi_x;       ///< amplitude-quadrature susceptibility
  std::complex<double> chi_p;       ///< phase-quadrature susceptibility
  double integration_time = 1.0;    ///< T > 0, seconds
};

/// Scale and incompatibility extracted from a device response.
///
/// norm is the common Euclidean scale of the two displacement directions;
/// mu in [0, 1] measures how incompatible the optimal measurements of the
/// two signal amplitudes are. The defining expression for mu can come out
/// negative; the canonical mode basis absorbs the sign, so mu stores the
/// magnitude and mu_sign keeps the raw sign for diagnostics.
struct EncodingParams {
  double norm = 1.0;
  double mu = 0.0;
  int mu_sign = +1;
};

/// Signal amplitudes in physical units (a, b) and rescaled units
/// (a_resc = norm * a, b_resc = norm * b). All library math runs on the
/// rescaled pair; conversion back to physical units happens only at the
/// reporting edge.
struct SignalParams {
  double a, b;
  double a_resc, b_resc;

  static SignalParams from_physical(double a, double b, double norm);
  static SignalParams from_rescaled(double a_resc, double b_resc,
                                    double norm = 1.0);
};

/// Two-mode coherent amplitudes carrying the rescaled signal. The second
/// amplitude is real by construction.
struct TwoModeCoherentState {
  std::complex<double> alpha1;
  std::complex<double> alpha2;
};

/// norm = sqrt(pi T (|chi_x|^2 + |chi_p|^2));
/// mu   = |2 pi T norm^-2 (Re chi_p Im chi_x - Re chi_x Im chi_p)|.
/// mu exceeding 1 by at most 1e-12 is clamped (a Cauchy-Schwarz bound in
/// exact arithmetic); any larger excess signals bad input.
///
/// Throws DegenerateDevice if both susceptibilities vanish.
EncodingParams encoding_from_device(const DeviceResponse& dev);

/// alpha1 = (A' + i mu B') / sqrt(2), alpha2 = sqrt(1 - mu^2) B' / sqrt(2).
TwoModeCoherentState encode_state(const EncodingParams& enc,
                                  const SignalParams& sig);

}  // namespace irtr
