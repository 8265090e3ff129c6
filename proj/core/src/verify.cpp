#include "irtr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "irtr/errors.hpp"
#include "irtr/holevo.hpp"
#include "irtr/model.hpp"
#include "irtr/numerics.hpp"
#include "irtr/oracles.hpp"
#include "irtr/protocol.hpp"
#include "irtr/quantum_info.hpp"
#include "irtr/rng.hpp"
#include "irtr/tradeoff.hpp"

namespace irtr {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

CheckResult check_geometric_tensor_oracle(std::uint64_t seed) {
  RngState rng(seed);
  double worst = 0.0;
  for (int im = 0; im <= 10; ++im) {
    const double mu = 0.1 * im;
    const GeometricTensor closed = geometric_tensor(mu);
    const EncodingParams enc{1.0, mu, +1};
    for (int rep = 0; rep < 5; ++rep) {
      const double a = 6.0 * rng.next_unit() - 3.0;
      const double b = 6.0 * rng.next_unit() - 3.0;
      const GeometricTensor num =
          geometric_tensor_oracle(enc, SignalParams::from_rescaled(a, b));
      worst = std::max({worst, std::abs(num.q11 - closed.q11),
                        std::abs(num.q22 - closed.q22),
                        std::abs(num.q12.real() - closed.q12.real()),
                        std::abs(num.q12.imag() - closed.q12.imag())});
    }
  }
  return {"geometric_tensor_oracle", worst <= 1e-6,
          fmt("max entry deviation %.3g (tolerance 1e-6)", worst)};
}

CheckResult check_qfim(std::uint64_t seed) {
  RngState rng(seed + 1);
  double worst = 0.0;
  bool closed_ok = true;
  for (int im = 0; im <= 10; ++im) {
    const double mu = 0.1 * im;
    const FisherMatrix qc = qfim(geometric_tensor(mu));
    closed_ok = closed_ok && qc.f11 == 2.0 && qc.f22 == 2.0 && qc.f12 == 0.0;
    const double a = 6.0 * rng.next_unit() - 3.0;
    const double b = 6.0 * rng.next_unit() - 3.0;
    const FisherMatrix qo = qfim(geometric_tensor_oracle(
        EncodingParams{1.0, mu, +1}, SignalParams::from_rescaled(a, b)));
    worst = std::max({worst, std::abs(qo.f11 - 2.0), std::abs(qo.f22 - 2.0),
                      std::abs(qo.f12)});
  }
  return {"qfim", closed_ok && worst <= 1e-6,
          fmt("closed form exact; oracle deviation %.3g (tolerance 1e-6)",
              worst)};
}

// Phases keeping |D(phi)| > 0.3 for every mu on the companion grid.
constexpr double kCfimPhis[] = {0.1, 1.8, 2.2, 2.6, 3.0};
constexpr double kCfimMus[] = {0.1, 0.3, 0.5, 0.7, 0.9};

CheckResult check_cfim_quadrature(bool fast) {
  const SignalParams sig = SignalParams::from_rescaled(0.3, -0.7);
  const int n = fast ? 128 : 384;
  const int stride = fast ? 2 : 1;
  double worst = 0.0;
  for (std::size_t i = 0; i < 5; i += stride) {
    for (std::size_t j = 0; j < 5; j += stride) {
      const double phi = kCfimPhis[i];
      const double mu = kCfimMus[j];
      const FisherMatrix ana = analytic_cfim(phi, mu);
      const FisherMatrix quad = cfim_by_score_quadrature(phi, mu, sig, n);
      worst = std::max({worst, std::abs(quad.f11 - ana.f11),
                        std::abs(quad.f22 - ana.f22), std::abs(quad.f12)});
    }
  }
  return {"cfim_score_quadrature", worst <= 1e-5,
          fmt("max entry deviation %.3g (tolerance 1e-5)", worst)};
}

CheckResult check_cfim_fd(bool fast) {
  const SignalParams sig = SignalParams::from_rescaled(-1.2, 0.4);
  const int n = fast ? 128 : 384;
  const int stride = fast ? 2 : 1;
  double worst = 0.0;
  for (std::size_t i = 0; i < 5; i += stride) {
    for (std::size_t j = 0; j < 5; j += stride) {
      const double phi = kCfimPhis[i];
      const double mu = kCfimMus[j];
      const FisherMatrix ana = analytic_cfim(phi, mu);
      const FisherMatrix fd = cfim_by_log_density_fd(phi, mu, sig, 1e-5, n);
      worst = std::max({worst, std::abs(fd.f11 - ana.f11),
                        std::abs(fd.f22 - ana.f22), std::abs(fd.f12)});
    }
  }
  return {"cfim_log_density_fd", worst <= 1e-5,
          fmt("max entry deviation %.3g (tolerance 1e-5)", worst)};
}

CheckResult check_density_normalization() {
  double worst = 0.0;
  for (const double phi : {0.4, 2.6}) {
    for (const double mu : {0.0, 0.9}) {
      const double mass =
          density_mass(phi, mu, SignalParams::from_rescaled(1.0, 2.0));
      worst = std::max(worst, std::abs(mass - 1.0));
    }
  }
  return {"density_normalization", worst <= 1e-6,
          fmt("max |mass - 1| = %.3g (tolerance 1e-6)", worst)};
}

CheckResult check_coeff_identity() {
  double worst = 0.0;
  for (const double phi : kCfimPhis) {
    for (const double mu : kCfimMus) {
      const ProtocolCoeffs c = coeffs(phi, mu);
      const double identity =
          c.c_coef * std::sqrt(1.0 - mu * mu) - c.s_coef * mu;
      worst = std::max(worst, std::abs(identity - 1.0));
    }
  }
  return {"coeff_identity", worst <= 1e-12,
          fmt("max |C sqrt(1-mu^2) - S mu - 1| = %.3g (tolerance 1e-12)",
              worst)};
}

CheckResult check_piecewise_identity() {
  double worst = 0.0;
  bool exact_on_region = true;
  for (int i = 0; i < 40; ++i) {
    const double phi = (i + 0.5) * kPi / 40.0;
    for (int j = 0; j < 25; ++j) {
      const double mu = (j + 0.5) / 25.0;
      const RegretPair r =
          regrets(qfim(geometric_tensor(mu)), analytic_cfim(phi, mu));
      const double via_regrets = irtr_lhs(r.d1, r.d2, mu);
      const double piecewise = lhs_piecewise(phi, mu);
      worst = std::max(worst, std::abs(piecewise - via_regrets));
      if (saturation_condition(phi, mu) && piecewise != mu * mu)
        exact_on_region = false;
    }
  }
  return {"piecewise_regret_identity", worst <= 1e-12 && exact_on_region,
          fmt("max route deviation %.3g (tolerance 1e-12)", worst)};
}

CheckResult check_boundary_bisection(bool inject_fault) {
  double worst = 0.0;
  try {
    for (const double mu : {0.1, 0.5, 0.7, 0.9}) {
      const double cap = 1.0 / (2.0 * (1.0 - mu * mu));
      for (int i = 0; i < 250; ++i) {
        const double e_a = 0.5 + (cap - 0.5) * i / 249.0;
        const double closed = boundary_eb(e_a, mu);
        auto equality = [&](double e_b) {
          const double a = std::max(0.0, 1.0 - 1.0 / (2.0 * e_a));
          const double b = std::max(0.0, 1.0 - 1.0 / (2.0 * e_b));
          const double cross =
              2.0 * std::sqrt(1.0 - mu * mu) * std::sqrt(a * b);
          return a + b + (inject_fault ? -cross : cross) - mu * mu;
        };
        double root = 0.5;
        if (equality(0.5) < 0.0) {
          Tolerances tol;
          tol.abs_tol = 1e-12;
          root = bisect(equality, 0.5, cap + 1.0, tol);
        }
        worst = std::max(worst, std::abs(closed - root));
      }
    }
  } catch (const Error& err) {
    return {"boundary_bisection", false,
            std::string("solver error: ") + err.what()};
  }
  return {"boundary_bisection", worst <= 1e-9,
          fmt("max |closed - bisected| = %.3g (tolerance 1e-9)", worst)};
}

CheckResult check_boundary_endpoints() {
  double worst = 0.0;
  for (const double mu : {0.1, 0.5, 0.7, 0.9}) {
    const double cap = 1.0 / (2.0 * (1.0 - mu * mu));
    const BoundaryCurve curve = boundary_curve(mu, 64);
    const ErrorPoint first = curve.points.front();
    const ErrorPoint last = curve.points.back();
    worst = std::max({worst, std::abs(first.e_a - 0.5),
                      std::abs(first.e_b - cap), std::abs(last.e_a - cap),
                      std::abs(last.e_b - 0.5)});
  }
  return {"boundary_endpoints", worst <= 1e-12,
          fmt("max endpoint deviation %.3g (tolerance 1e-12)", worst)};
}

CheckResult check_holevo_tangency(bool fast) {
  const int n = fast ? 2000 : 10000;
  double lowest = 0.0;
  double highest_min = 0.0;
  for (const double w : {0.15, 0.5, 0.85}) {
    for (const double mu : {0.1, 0.5, 0.7, 0.9}) {
      const double gap = tangency_gap(w, mu, n);
      lowest = std::min(lowest, gap);
      highest_min = std::max(highest_min, gap);
    }
  }
  const bool ok = lowest >= -1e-9 && highest_min <= 1e-6;
  return {"holevo_tangency", ok,
          fmt("gaps within [%.3g, %.3g] (required [-1e-9, 1e-6])", lowest,
              highest_min)};
}

CheckResult check_mu_zero() {
  bool ok = true;
  double worst = 0.0;
  for (const double w : {0.15, 0.5, 0.85}) {
    worst = std::max(worst, std::abs(hcrb(w, 0.0).sigma - 1.0));
  }
  ok = ok && worst <= 1e-12;
  ok = ok && equal_weight_error(0.0) == 0.5;
  const ErrorPoint pt = error_point_from_phi(0.0, 0.0);
  ok = ok && pt.e_a == 0.5 && pt.e_b == 0.5;
  return {"mu_zero_compatibility", ok,
          fmt("|sigma - 1| <= %.3g; corner attained exactly", worst)};
}

CheckResult check_monte_carlo(std::uint64_t seed) {
  const double mu = 0.9;
  const SignalParams sig = SignalParams::from_rescaled(0.7, -0.3);
  const int n = 100000;
  double worst_rel = 0.0;
  int index = 0;
  for (const double phi : {2.1, 2.4, 2.7, 3.0, kPi}) {
    RngState rng(seed + 100 + static_cast<std::uint64_t>(index++));
    const OutcomeDistribution dist = outcome_distribution(phi, mu, sig);
    const std::vector<OutcomeSample> samples = sample_outcomes(dist, n, rng);
    const MleResult est = mle(samples);
    const ErrorPoint expected = error_point_from_phi(phi, mu);
    worst_rel = std::max(
        {worst_rel, std::abs(est.var_a * n - expected.e_a) / expected.e_a,
         std::abs(est.var_b * n - expected.e_b) / expected.e_b});
  }
  return {"monte_carlo_attainment", worst_rel <= 0.05,
          fmt("max relative deviation %.3g (tolerance 0.05)", worst_rel)};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  results.push_back(check_geometric_tensor_oracle(opts.seed));
  results.push_back(check_qfim(opts.seed));
  results.push_back(check_cfim_quadrature(opts.fast));
  results.push_back(check_cfim_fd(opts.fast));
  results.push_back(check_density_normalization());
  results.push_back(check_coeff_identity());
  results.push_back(check_piecewise_identity());
  results.push_back(check_boundary_bisection(opts.inject_fault));
  results.push_back(check_boundary_endpoints());
  results.push_back(check_holevo_tangency(opts.fast));
  results.push_back(check_mu_zero());
  if (!opts.fast) results.push_back(check_monte_carlo(opts.seed));
  return results;
}

}  // namespace irtr
