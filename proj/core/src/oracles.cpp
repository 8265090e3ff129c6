#include "irtr/oracles.hpp"

#include <array>
#include <cmath>

#include "irtr/errors.hpp"
#include "irtr/numerics.hpp"

namespace irtr {

namespace {

Box2 eight_sigma_box(const OutcomeDistribution& d) {
  const double sx = std::sqrt(d.var_xi);
  const double se = std::sqrt(d.var_eta);
  return {d.mean_xi - 8.0 * sx, d.mean_xi + 8.0 * sx, d.mean_eta - 8.0 * se,
          d.mean_eta + 8.0 * se};
}

}  // namespace

FisherMatrix cfim_by_score_quadrature(double phi, double mu,
                                      const SignalParams& sig, int n) {
  const OutcomeDistribution dist = outcome_distribution(phi, mu, sig);
  const Box2 box = eight_sigma_box(dist);
  auto entry = [&](int j, int k) {
    return grid_integrate_2d(
        [&](double xi, double eta) {
          const std::array<double, 2> s = score(dist, xi, eta);
          return density(dist, xi, eta) * s[static_cast<std::size_t>(j)] *
                 s[static_cast<std::size_t>(k)];
        },
        box, n);
  };
  return {entry(0, 0), entry(0, 1), entry(1, 1)};
}

FisherMatrix cfim_by_log_density_fd(double phi, double mu,
                                    const SignalParams& sig, double h,
                                    int n) {
  const OutcomeDistribution dist = outcome_distribution(phi, mu, sig);
  const Box2 box = eight_sigma_box(dist);
  if (n < 64)
    throw InvalidArgument(
        "cfim_by_log_density_fd: need at least 64 points per axis");

  // One midpoint pass accumulating all three entries; the log density is
  // treated as a black box of the true amplitudes, differenced numerically.
  const double h1 = (box.hi1 - box.lo1) / n;
  const double h2 = (box.hi2 - box.lo2) / n;
  const std::array<double, 2> params{sig.a_resc, sig.b_resc};
  double f11 = 0.0, f12 = 0.0, f22 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double xi = box.lo1 + (i + 0.5) * h1;
    for (int j = 0; j < n; ++j) {
      const double eta = box.lo2 + (j + 0.5) * h2;
      auto logp = [&](std::span<const double> p) {
        const OutcomeDistribution shifted = outcome_distribution(
            phi, mu, SignalParams::from_rescaled(p[0], p[1]));
        return log_density(shifted, xi, eta);
      };
      const std::vector<double> g = finite_diff_gradient(logp, params, h);
      const double p = density(dist, xi, eta);
      if (!std::isfinite(p) || !std::isfinite(g[0]) || !std::isfinite(g[1]))
        throw NonFiniteIntegrand("cfim_by_log_density_fd: bad evaluation");
      f11 += p * g[0] * g[0];
      f12 += p * g[0] * g[1];
      f22 += p * g[1] * g[1];
    }
  }
  const double cell = h1 * h2;
  return {f11 * cell, f12 * cell, f22 * cell};
}

double density_mass(double phi, double mu, const SignalParams& sig, int n) {
  const OutcomeDistribution dist = outcome_distribution(phi, mu, sig);
  return grid_integrate_2d(
      [&](double xi, double eta) { return density(dist, xi, eta); },
      eight_sigma_box(dist), n);
}

}  // namespace irtr
