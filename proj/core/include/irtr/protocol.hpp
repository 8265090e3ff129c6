#pragma once

#include <array>
#include <span>
#include <vector>

#include "irtr/model.hpp"
#include "irtr/quantum_info.hpp"
#include "irtr/rng.hpp"
#include "irtr/tradeoff.hpp"

namespace irtr {

/// Mixing coefficients of the joint quadrature measurement at phase phi.
/// All share the denominator D(phi) = sqrt(1-mu^2) cos(phi) - mu sin(phi);
/// t_coef = s_coef / c_coef = tan(phi) wherever c_coef != 0.
struct ProtocolCoeffs {
  double c_coef;  ///< cos(phi) / D
  double s_coef;  ///< sin(phi) / D
  double t_coef;  ///< tan(phi)
};

/// One joint outcome: xi estimates the first rescaled amplitude, eta the
/// second.
struct OutcomeSample {
  double xi, eta;
};

/// Outcome statistics of the joint measurement. xi and eta are independent
/// Gaussians centred on the true rescaled amplitudes, with
/// var_xi = (1 + tan^2(phi))/2 and var_eta = 1/(2 D(phi)^2). This reduced
/// form extends continuously to phi in {0, pi}, where the raw coefficient
/// form is singular.
struct OutcomeDistribution {
  double mean_xi, var_xi;
  double mean_eta, var_eta;
};

/// Sample means and the variances of those means.
struct MleResult {
  double a_hat, b_hat;
  double var_a, var_b;
};

/// D(phi) = sqrt(1-mu^2) cos(phi) - mu sin(phi).
double denominator(double phi, double mu);

/// Throws DenominatorZero where |D(phi)| <= 1e-12 (the measurement
/// degenerates at tan(phi) = sqrt(1-mu^2)/mu).
ProtocolCoeffs coeffs(double phi, double mu);

/// Classical Fisher matrix of the measurement in closed form:
/// diag(2 cos^2(phi), 2 D(phi)^2). Defined for every phase.
FisherMatrix analytic_cfim(double phi, double mu);

/// Throws DenominatorZero where the eta variance diverges.
OutcomeDistribution outcome_distribution(double phi, double mu,
                                         const SignalParams& sig);

double log_density(const OutcomeDistribution& dist, double xi, double eta);
double density(const OutcomeDistribution& dist, double xi, double eta);

/// Derivative of log_density with respect to the true rescaled amplitudes.
std::array<double, 2> score(const OutcomeDistribution& dist, double xi,
                            double eta);

/// n independent outcome pairs; deterministic per rng seed.
std::vector<OutcomeSample> sample_outcomes(const OutcomeDistribution& dist,
                                           int n, RngState& rng);

/// Gaussian location model: estimates are the sample means, reported
/// variances are the unbiased sample variances divided by n.
/// Throws InsufficientSamples for fewer than two samples.
MleResult mle(std::span<const OutcomeSample> samples);

/// Phase region of [0, pi] where the measurement saturates the tradeoff
/// relation: sin(phi + asin(mu)) <= 1e-12, equivalently
/// mu cos(phi) + sqrt(1-mu^2) sin(phi) <= 0.
bool saturation_condition(double phi, double mu);

/// Regret-space left side of the tradeoff relation for this measurement,
/// in piecewise closed form. Equals mu^2 exactly on the saturation region,
/// else mu^2 + 4 sqrt(1-mu^2) sin(phi) (sqrt(1-mu^2) sin(phi) + mu cos(phi)).
double lhs_piecewise(double phi, double mu);

/// Estimation variances attained at phase phi: the inverse Fisher diagonal.
/// On the saturation region the point lies on the tradeoff boundary.
/// Throws ZeroInformation if a Fisher diagonal entry is below 1e-15.
ErrorPoint error_point_from_phi(double phi, double mu);

}  // namespace irtr
