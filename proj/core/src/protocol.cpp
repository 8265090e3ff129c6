#include "irtr/protocol.hpp"

#include <cmath>
#include <numbers>

#include "irtr/errors.hpp"

namespace irtr {

namespace {

constexpr double kDenominatorFloor = 1e-12;

void require_phase(double phi) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi))
    throw InvalidArgument("protocol: measurement phase must lie in [0, pi]");
}

void require_mu(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0))
    throw OutOfRangeMu("protocol: mu must lie in [0, 1]");
}

}  // namespace

double denominator(double phi, double mu) {
  require_phase(phi);
  require_mu(mu);
  return std::sqrt(1.0 - mu * mu) * std::cos(phi) - mu * std::sin(phi);
}

ProtocolCoeffs coeffs(double phi, double mu) {
  const double d = denominator(phi, mu);
  if (std::abs(d) <= kDenominatorFloor)
    throw DenominatorZero(
        "coeffs: measurement degenerates where the denominator vanishes");
  return {std::cos(phi) / d, std::sin(phi) / d, std::tan(phi)};
}

FisherMatrix analytic_cfim(double phi, double mu) {
  const double d = denominator(phi, mu);
  const double c = std::cos(phi);
  return {2.0 * c * c, 0.0, 2.0 * d * d};
}

OutcomeDistribution outcome_distribution(double phi, double mu,
                                         const SignalParams& sig) {
  const double d = denominator(phi, mu);
  if (std::abs(d) <= kDenominatorFloor)
    throw DenominatorZero(
        "outcome_distribution: eta variance diverges where the denominator "
        "vanishes");
  const double t = std::tan(phi);
  return {sig.a_resc, 0.5 * (1.0 + t * t), sig.b_resc, 1.0 / (2.0 * d * d)};
}

double log_density(const OutcomeDistribution& dist, double xi, double eta) {
  const double dx = xi - dist.mean_xi;
  const double de = eta - dist.mean_eta;
  const double two_pi = 2.0 * std::numbers::pi;
  return -0.5 * std::log(two_pi * dist.var_xi) -
         0.5 * std::log(two_pi * dist.var_eta) -
         0.5 * dx * dx / dist.var_xi - 0.5 * de * de / dist.var_eta;
}

double density(const OutcomeDistribution& dist, double xi, double eta) {
  return std::exp(log_density(dist, xi, eta));
}

std::array<double, 2> score(const OutcomeDistribution& dist, double xi,
                            double eta) {
  return {(xi - dist.mean_xi) / dist.var_xi,
          (eta - dist.mean_eta) / dist.var_eta};
}

std::vector<OutcomeSample> sample_outcomes(const OutcomeDistribution& dist,
                                           int n, RngState& rng) {
  if (n < 1)
    throw InvalidArgument("sample_outcomes: need at least one sample");
  std::vector<OutcomeSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double xi = sample_gaussian(rng, dist.mean_xi, dist.var_xi);
    const double eta = sample_gaussian(rng, dist.mean_eta, dist.var_eta);
    out.push_back({xi, eta});
  }
  return out;
}

MleResult mle(std::span<const OutcomeSample> samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw InsufficientSamples("mle: need at least two samples");
  double sum_xi = 0.0, sum_eta = 0.0;
  for (const OutcomeSample& s : samples) {
    sum_xi += s.xi;
    sum_eta += s.eta;
  }
  const double mean_xi = sum_xi / static_cast<double>(n);
  const double mean_eta = sum_eta / static_cast<double>(n);
  double ss_xi = 0.0, ss_eta = 0.0;
  for (const OutcomeSample& s : samples) {
    ss_xi += (s.xi - mean_xi) * (s.xi - mean_xi);
    ss_eta += (s.eta - mean_eta) * (s.eta - mean_eta);
  }
  const double var_xi = ss_xi / static_cast<double>(n - 1);
  const double var_eta = ss_eta / static_cast<double>(n - 1);
  return {mean_xi, mean_eta, var_xi / static_cast<double>(n),
          var_eta / static_cast<double>(n)};
}

bool saturation_condition(double phi, double mu) {
  require_phase(phi);
  require_mu(mu);
  // Equivalent to mu cos(phi) + sqrt(1-mu^2) sin(phi) <= 0; the slack keeps
  // the onset phase pi - asin(mu) itself inside the region.
  return std::sin(phi + std::asin(mu)) <= 1e-12;
}

double lhs_piecewise(double phi, double mu) {
  const double mu2 = mu * mu;
  if (saturation_condition(phi, mu)) return mu2;
  const double root = std::sqrt(1.0 - mu2);
  const double k = mu * std::cos(phi) + root * std::sin(phi);
  return mu2 + 4.0 * root * std::sin(phi) * k;
}

ErrorPoint error_point_from_phi(double phi, double mu) {
  const FisherMatrix f = analytic_cfim(phi, mu);
  if (f.f11 < 1e-15 || f.f22 < 1e-15)
    throw ZeroInformation(
        "error_point_from_phi: variance diverges at this phase");
  return {1.0 / f.f11, 1.0 / f.f22};
}

}  // namespace irtr
