#include <doctest.h>

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "irtr/errors.hpp"
#include "irtr/numerics.hpp"
#include "irtr/oracles.hpp"
#include "irtr/protocol.hpp"
#include "irtr/quantum_info.hpp"
#include "irtr/rng.hpp"
#include "irtr/tradeoff.hpp"

using namespace irtr;

namespace {

constexpr double kPi = std::numbers::pi;

// Phases that keep |D| well away from zero for every mu used below.
constexpr double kPhis[] = {0.1, 1.8, 2.2, 2.6, 3.0};
constexpr double kMus[] = {0.1, 0.3, 0.5, 0.7, 0.9};

}  // namespace

TEST_SUITE("protocol") {

TEST_CASE("coefficients at reference phases") {
  const ProtocolCoeffs at_zero = coeffs(0.0, 0.6);
  CHECK(std::abs(at_zero.c_coef - 1.25) <= 1e-14);
  CHECK(at_zero.s_coef == 0.0);
  CHECK(at_zero.t_coef == 0.0);

  const ProtocolCoeffs at_pi = coeffs(kPi, 0.9);
  CHECK(std::abs(at_pi.c_coef - 1.0 / std::sqrt(1.0 - 0.81)) <= 1e-12);
  CHECK(std::abs(at_pi.s_coef) <= 1e-12);
  CHECK(std::abs(at_pi.t_coef) <= 1e-12);

  const ProtocolCoeffs identity_cfg = coeffs(0.0, 0.0);
  CHECK(identity_cfg.c_coef == 1.0);
  CHECK(identity_cfg.s_coef == 0.0);
  CHECK(identity_cfg.t_coef == 0.0);
}

TEST_CASE("the measurement degenerates where the denominator vanishes") {
  // D = 0 at phi = acos(mu).
  CHECK_THROWS_AS(coeffs(std::acos(0.6), 0.6), DenominatorZero);
  CHECK_THROWS_AS(
      outcome_distribution(std::acos(0.3), 0.3,
                           SignalParams::from_rescaled(0.0, 0.0)),
      DenominatorZero);
}

TEST_CASE("coefficient identity holds everywhere the coefficients exist") {
  for (const double phi : kPhis) {
    for (const double mu : kMus) {
      const ProtocolCoeffs c = coeffs(phi, mu);
      CHECK(std::abs(c.c_coef * std::sqrt(1.0 - mu * mu) - c.s_coef * mu -
                     1.0) <= 1e-12);
      if (c.c_coef != 0.0)
        CHECK(std::abs(c.s_coef / c.c_coef - c.t_coef) <= 1e-12);
    }
  }
}

TEST_CASE("closed-form classical Fisher matrix") {
  const FisherMatrix ideal = analytic_cfim(0.0, 0.0);
  CHECK(ideal.f11 == 2.0);
  CHECK(ideal.f22 == 2.0);
  CHECK(ideal.f12 == 0.0);

  const FisherMatrix endpoint = analytic_cfim(kPi, 0.9);
  CHECK(std::abs(endpoint.f11 - 2.0) <= 1e-14);
  CHECK(std::abs(endpoint.f22 - 0.38) <= 1e-14);

  const FisherMatrix full = analytic_cfim(3.0 * kPi / 4.0, 1.0);
  CHECK(std::abs(full.f11 - 1.0) <= 1e-14);
  CHECK(std::abs(full.f22 - 1.0) <= 1e-14);
}

TEST_CASE("outcome distribution at the ideal configuration") {
  const OutcomeDistribution d =
      outcome_distribution(0.0, 0.0, SignalParams::from_rescaled(1.0, 2.0));
  CHECK(d.mean_xi == 1.0);
  CHECK(std::abs(d.var_xi - 0.5) <= 1e-15);
  CHECK(d.mean_eta == 2.0);
  CHECK(std::abs(d.var_eta - 0.5) <= 1e-15);
}

TEST_CASE("xi variance matches the Fisher diagonal") {
  const double phi = kPi / 3.0, mu = 0.4;
  const OutcomeDistribution d =
      outcome_distribution(phi, mu, SignalParams::from_rescaled(0.0, 0.0));
  const double cfi_xi = 1.0 / d.var_xi;
  CHECK(std::abs(cfi_xi - analytic_cfim(phi, mu).f11) <= 1e-12);
  CHECK(std::abs(d.var_xi - 0.5 / (std::cos(phi) * std::cos(phi))) <= 1e-12);
}

TEST_CASE("eta stays centred on the second amplitude") {
  for (const double phi : kPhis) {
    for (const double mu : kMus) {
      const OutcomeDistribution d = outcome_distribution(
          phi, mu, SignalParams::from_rescaled(-0.8, 1.7));
      CHECK(d.mean_eta == 1.7);
      CHECK(std::abs(1.0 / d.var_eta - analytic_cfim(phi, mu).f22) <= 1e-12);
    }
  }
}

TEST_CASE("the outcome density is normalized") {
  const double mass =
      density_mass(2.6, 0.9, SignalParams::from_rescaled(1.0, 2.0));
  CHECK(std::abs(mass - 1.0) <= 1e-6);
}

TEST_CASE("analytic score matches finite differences of the log density") {
  const double phi = 2.2, mu = 0.5;
  const double xi = 0.9, eta = -1.4;
  const SignalParams sig = SignalParams::from_rescaled(0.3, -0.7);
  const OutcomeDistribution d = outcome_distribution(phi, mu, sig);
  const std::array<double, 2> analytic = score(d, xi, eta);

  auto logp = [&](std::span<const double> p) {
    return log_density(
        outcome_distribution(phi, mu, SignalParams::from_rescaled(p[0], p[1])),
        xi, eta);
  };
  const std::vector<double> at{sig.a_resc, sig.b_resc};
  const std::vector<double> numeric = finite_diff_gradient(logp, at, 1e-5);
  CHECK(std::abs(numeric[0] - analytic[0]) <= 1e-6);
  CHECK(std::abs(numeric[1] - analytic[1]) <= 1e-6);
}

TEST_CASE("quadrature and finite-difference Fisher routes agree with the "
          "closed form") {
  const SignalParams sig = SignalParams::from_rescaled(0.3, -0.7);
  for (const double phi : {0.1, 2.6}) {
    for (const double mu : {0.3, 0.9}) {
      const FisherMatrix ana = analytic_cfim(phi, mu);
      const FisherMatrix quad = cfim_by_score_quadrature(phi, mu, sig);
      CHECK(std::abs(quad.f11 - ana.f11) <= 1e-6);
      CHECK(std::abs(quad.f22 - ana.f22) <= 1e-6);
      CHECK(std::abs(quad.f12) <= 1e-6);
      const FisherMatrix fd = cfim_by_log_density_fd(phi, mu, sig);
      CHECK(std::abs(fd.f11 - ana.f11) <= 1e-5);
      CHECK(std::abs(fd.f22 - ana.f22) <= 1e-5);
      CHECK(std::abs(fd.f12) <= 1e-5);
    }
  }
}

TEST_CASE("the Fisher matrix does not depend on the true amplitudes") {
  RngState rng(77);
  const double phi = 1.8, mu = 0.7;
  const FisherMatrix ana = analytic_cfim(phi, mu);
  for (int rep = 0; rep < 3; ++rep) {
    const SignalParams sig = SignalParams::from_rescaled(
        4.0 * rng.next_unit() - 2.0, 4.0 * rng.next_unit() - 2.0);
    const FisherMatrix fd = cfim_by_log_density_fd(phi, mu, sig);
    CHECK(std::abs(fd.f11 - ana.f11) <= 1e-5);
    CHECK(std::abs(fd.f22 - ana.f22) <= 1e-5);
  }
}

TEST_CASE("sampling is deterministic and well centred") {
  const OutcomeDistribution d =
      outcome_distribution(kPi, 0.9, SignalParams::from_rescaled(0.0, 0.0));
  RngState rng(11);
  const auto samples = sample_outcomes(d, 100000, rng);
  REQUIRE(samples.size() == 100000);
  double mean_xi = 0.0, mean_eta = 0.0;
  for (const OutcomeSample& s : samples) {
    mean_xi += s.xi;
    mean_eta += s.eta;
  }
  mean_xi /= samples.size();
  mean_eta /= samples.size();
  const double bound_xi = 4.0 * std::sqrt(d.var_xi / samples.size());
  const double bound_eta = 4.0 * std::sqrt(d.var_eta / samples.size());
  CHECK(std::abs(mean_xi) <= bound_xi);
  CHECK(std::abs(mean_eta) <= bound_eta);

  RngState again(11);
  const auto replay = sample_outcomes(d, 100, again);
  RngState fresh(11);
  const auto replay2 = sample_outcomes(d, 100, fresh);
  for (int i = 0; i < 100; ++i) {
    CHECK(replay[i].xi == replay2[i].xi);
    CHECK(replay[i].eta == replay2[i].eta);
  }
  RngState other(12);
  const auto different = sample_outcomes(d, 100, other);
  int same = 0;
  for (int i = 0; i < 100; ++i)
    if (replay[i].xi == different[i].xi) ++same;
  CHECK(same == 0);

  RngState one(3);
  const auto single = sample_outcomes(d, 1, one);
  CHECK(single.size() == 1);
  CHECK(std::isfinite(single[0].xi));
  CHECK(std::isfinite(single[0].eta));
}

TEST_CASE("mle on degenerate and simulated data") {
  const std::vector<OutcomeSample> flat(10, OutcomeSample{1.5, -2.5});
  const MleResult exact = mle(flat);
  CHECK(exact.a_hat == 1.5);
  CHECK(exact.b_hat == -2.5);
  CHECK(exact.var_a == 0.0);
  CHECK(exact.var_b == 0.0);

  const std::vector<OutcomeSample> one(1, OutcomeSample{0.0, 0.0});
  CHECK_THROWS_AS(mle(one), InsufficientSamples);
}

TEST_CASE("n-scaled mle variances reach the Fisher limits") {
  const int n = 100000;
  // Three standard errors of a gaussian variance estimate.
  const double three_se = 3.0 * std::sqrt(2.0 / (n - 1.0));
  {
    const double phi = kPi, mu = 0.9;
    RngState rng(2025);
    const OutcomeDistribution d =
        outcome_distribution(phi, mu, SignalParams::from_rescaled(0.4, 1.1));
    const MleResult est = mle(sample_outcomes(d, n, rng));
    const ErrorPoint limit = error_point_from_phi(phi, mu);
    CHECK(std::abs(est.var_a * n - limit.e_a) <= three_se * est.var_a * n);
    CHECK(std::abs(est.var_b * n - limit.e_b) <= three_se * est.var_b * n);
    CHECK(std::abs(est.var_a * n - limit.e_a) / limit.e_a <= 0.05);
    CHECK(std::abs(est.var_b * n - limit.e_b) / limit.e_b <= 0.05);
    CHECK(std::abs(limit.e_a - 0.5) <= 1e-14);
    CHECK(std::abs(limit.e_b - 2.6315789473684217) <= 1e-12);
  }
  {
    RngState rng(2026);
    const OutcomeDistribution d =
        outcome_distribution(0.0, 0.0, SignalParams::from_rescaled(0.0, 0.0));
    const MleResult est = mle(sample_outcomes(d, n, rng));
    CHECK(std::abs(est.var_a * n - 0.5) <= three_se * est.var_a * n);
    CHECK(std::abs(est.var_b * n - 0.5) <= three_se * est.var_b * n);
  }
}

TEST_CASE("saturation condition") {
  CHECK(saturation_condition(kPi, 0.0));
  CHECK(saturation_condition(kPi, 0.5));
  CHECK(saturation_condition(kPi, 0.99));
  CHECK_FALSE(saturation_condition(0.0, 0.3));

  const double onset = kPi - std::asin(0.9);  // 2.021823138591159
  CHECK(std::abs(onset - 2.021823138591159) <= 1e-12);
  CHECK(saturation_condition(onset + 1e-9, 0.9));
  CHECK(saturation_condition(onset, 0.9));
  CHECK_FALSE(saturation_condition(onset - 0.01, 0.9));

  const double onset_half = kPi - std::asin(0.5);  // 2.617993877991494
  CHECK(std::abs(onset_half - 2.617993877991494) <= 1e-12);
  CHECK(saturation_condition(onset_half + 1e-9, 0.5));
  CHECK_FALSE(saturation_condition(onset_half - 0.01, 0.5));
}

TEST_CASE("the compact condition matches the sign form") {
  for (int i = 0; i <= 100; ++i) {
    const double phi = kPi * i / 100.0;
    for (const double mu : kMus) {
      const double k =
          mu * std::cos(phi) + std::sqrt(1.0 - mu * mu) * std::sin(phi);
      if (std::abs(k) <= 1e-9) continue;  // hairline of the slack
      CHECK(saturation_condition(phi, mu) == (k <= 0.0));
    }
  }
}

TEST_CASE("piecewise left side at reference points") {
  CHECK(std::abs(lhs_piecewise(2.5, 0.9) - 0.81) <= 1e-15);
  CHECK(std::abs(lhs_piecewise(0.0, 0.5) - 0.25) <= 1e-15);
  CHECK(std::abs(lhs_piecewise(kPi / 2.0, 0.9) - 1.57) <= 1e-12);
}

TEST_CASE("piecewise form equals the regret route everywhere") {
  for (int i = 0; i < 40; ++i) {
    const double phi = (i + 0.5) * kPi / 40.0;
    for (int j = 0; j < 25; ++j) {
      const double mu = (j + 0.5) / 25.0;
      const RegretPair r =
          regrets(qfim(geometric_tensor(mu)), analytic_cfim(phi, mu));
      CHECK(std::abs(lhs_piecewise(phi, mu) - irtr_lhs(r.d1, r.d2, mu)) <=
            1e-12);
      if (saturation_condition(phi, mu))
        CHECK(lhs_piecewise(phi, mu) == mu * mu);
      else
        CHECK(lhs_piecewise(phi, mu) > mu * mu);
    }
  }
}

TEST_CASE("error points trace the boundary on the saturation region") {
  const double mu = 0.9;
  const ErrorPoint endpoint = error_point_from_phi(kPi, mu);
  CHECK(std::abs(endpoint.e_a - 0.5) <= 1e-14);
  CHECK(std::abs(endpoint.e_b - 2.6315789473684217) <= 1e-12);

  const ErrorPoint on_curve = error_point_from_phi(2.6, mu);
  CHECK(std::abs(error_tradeoff_lhs(on_curve, mu) - mu * mu) <= 1e-9);
  CHECK(std::abs(on_curve.e_b - boundary_eb(on_curve.e_a, mu)) <= 1e-9);

  // Outside the region the point is feasible but strictly non-tight.
  const ErrorPoint loose = error_point_from_phi(0.3, mu);
  CHECK(feasible(loose, mu));
  CHECK(error_tradeoff_lhs(loose, mu) - mu * mu > 0.01);
}

TEST_CASE("phases without information are rejected") {
  CHECK_THROWS_AS(error_point_from_phi(kPi / 2.0, 0.9), ZeroInformation);
  CHECK_THROWS_AS(error_point_from_phi(std::acos(0.6), 0.6),
                  ZeroInformation);
}

}  // TEST_SUITE
