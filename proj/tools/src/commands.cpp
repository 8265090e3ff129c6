#include "irtr/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <span>
#include <string>

#include "irtr/cli/csv.hpp"
#include "irtr/errors.hpp"
#include "irtr/gw_sensor.hpp"
#include "irtr/holevo.hpp"
#include "irtr/model.hpp"
#include "irtr/protocol.hpp"
#include "irtr/rng.hpp"
#include "irtr/tradeoff.hpp"
#include "irtr/verify.hpp"
#include "irtr/version.hpp"

namespace irtr::cli {

namespace {

constexpr double kPi = std::numbers::pi;

int usage_error(const std::string& message) {
  std::cerr << "irtr: " << message << "\n";
  return 2;
}

int io_error(const std::string& path) {
  std::cerr << "irtr: failed to write " << (path.empty() ? "stdout" : path)
            << "\n";
  return 1;
}

std::string kv(const char* key, double v) {
  return std::string(" ") + key + "=" + format_double(v);
}

std::string kv_int(const char* key, long long v) {
  return std::string(" ") + key + "=" + std::to_string(v);
}

int emit(const RunConfig& cfg, const CsvBuilder& csv) {
  if (!write_output(cfg.out_path, csv.str())) return io_error(cfg.out_path);
  if (cfg.emit_plot_script && !cfg.out_path.empty() &&
      !write_plot_script(cfg.out_path))
    return io_error(cfg.out_path + ".py");
  return 0;
}

bool valid_mu(double mu) { return mu >= 0.0 && mu <= 1.0; }

}  // namespace

int cmd_boundary(const RunConfig& cfg) {
  if (!valid_mu(cfg.mu)) return usage_error("--mu must lie in [0, 1]");
  if (cfg.n_points < 2) return usage_error("--n-points must be at least 2");
  try {
    CsvBuilder csv;
    csv.comment(std::string("irtr boundary") + kv("mu", cfg.mu) +
                kv_int("n_points", cfg.n_points) +
                kv_int("seed", static_cast<long long>(cfg.seed)) +
                " version=" + kVersion);
    csv.header({"e_a", "e_b"});
    for (const ErrorPoint& pt : boundary_curve(cfg.mu, cfg.n_points).points)
      csv.row({pt.e_a, pt.e_b});
    return emit(cfg, csv);
  } catch (const Error& err) {
    std::cerr << "irtr: " << err.what() << "\n";
    return 1;
  }
}

int cmd_holevo(const RunConfig& cfg) {
  if (!valid_mu(cfg.mu)) return usage_error("--mu must lie in [0, 1]");
  if (!(cfg.w > 0.0 && cfg.w < 1.0))
    return usage_error("--w must lie strictly inside (0, 1)");
  if (cfg.n_points < 2) return usage_error("--n-points must be at least 2");
  try {
    const HolevoResult res = hcrb(cfg.w, cfg.mu);
    // The tangency cross-check needs a dense boundary regardless of the
    // plotting resolution.
    const int dense = std::max(cfg.n_points, 10000);
    const double gap = tangency_gap(cfg.w, cfg.mu, dense);

    CsvBuilder csv;
    csv.comment(std::string("irtr holevo") + kv("mu", cfg.mu) +
                kv("w", cfg.w) + kv_int("n_points", cfg.n_points) +
                kv_int("seed", static_cast<long long>(cfg.seed)) +
                " version=" + kVersion);
    csv.header({"sigma_h", "phi_star"});
    csv.row({res.sigma, res.phi_star});
    csv.header({"e_a", "e_b"});
    for (const ErrorPoint& pt : holevo_line(res, cfg.n_points))
      csv.row({pt.e_a, pt.e_b});
    csv.comment("tangency_gap=" + format_double(gap));
    return emit(cfg, csv);
  } catch (const Error& err) {
    std::cerr << "irtr: " << err.what() << "\n";
    return 1;
  }
}

int cmd_phi_scan(const RunConfig& cfg) {
  if (!valid_mu(cfg.mu)) return usage_error("--mu must lie in [0, 1]");
  if (cfg.n_points < 2) return usage_error("--n-points must be at least 2");
  try {
    CsvBuilder csv;
    csv.comment(std::string("irtr phi-scan") + kv("mu", cfg.mu) +
                kv_int("n_points", cfg.n_points) +
                kv_int("seed", static_cast<long long>(cfg.seed)) +
                " version=" + kVersion);
    csv.header({"phi", "lhs", "condition_met"});
    for (int i = 0; i < cfg.n_points; ++i) {
      const double phi = kPi * i / (cfg.n_points - 1);
      csv.row({phi, lhs_piecewise(phi, cfg.mu),
               saturation_condition(phi, cfg.mu) ? 1.0 : 0.0});
    }
    return emit(cfg, csv);
  } catch (const Error& err) {
    std::cerr << "irtr: " << err.what() << "\n";
    return 1;
  }
}

int cmd_protocol_sim(const RunConfig& cfg) {
  if (!valid_mu(cfg.mu)) return usage_error("--mu must lie in [0, 1]");
  if (cfg.n_samples < 100)
    return usage_error("--n-samples must be at least 100");

  std::vector<double> phases = cfg.phi;
  if (phases.empty()) {
    const double onset = kPi - std::asin(cfg.mu);
    for (int i = 0; i < 5; ++i) phases.push_back(onset + (kPi - onset) * i / 4.0);
  }
  for (const double phi : phases) {
    if (!(phi >= 0.0 && phi <= kPi))
      return usage_error("--phi values must lie in [0, pi]");
    if (!saturation_condition(phi, cfg.mu))
      return usage_error("--phi values must satisfy the saturation condition");
  }

  try {
    CsvBuilder csv;
    std::string meta = std::string("irtr protocol-sim") + kv("mu", cfg.mu) +
                       kv_int("n_samples", cfg.n_samples) +
                       kv_int("seed", static_cast<long long>(cfg.seed)) +
                       " version=" + kVersion;
    for (const double phi : phases) meta += kv("phi", phi);
    csv.comment(meta);
    csv.header({"phi", "e_a_analytic", "e_b_analytic", "e_a_mc", "e_b_mc",
                "z_a", "z_b"});

    const SignalParams sig = SignalParams::from_rescaled(0.0, 0.0);
    const double n = cfg.n_samples;
    const double se_rel = std::sqrt(2.0 / (n - 1.0));
    std::uint64_t worker = 0;
    for (const double phi : phases) {
      const ErrorPoint analytic = error_point_from_phi(phi, cfg.mu);
      RngState rng(cfg.seed + worker++);
      const OutcomeDistribution dist =
          outcome_distribution(phi, cfg.mu, sig);
      const std::vector<OutcomeSample> samples =
          sample_outcomes(dist, cfg.n_samples, rng);
      const MleResult est = mle(samples);
      const double mc_a = est.var_a * n;
      const double mc_b = est.var_b * n;
      csv.row({phi, analytic.e_a, analytic.e_b, mc_a, mc_b,
               (mc_a - analytic.e_a) / (mc_a * se_rel),
               (mc_b - analytic.e_b) / (mc_b * se_rel)});
    }
    return emit(cfg, csv);
  } catch (const Error& err) {
    std::cerr << "irtr: " << err.what() << "\n";
    return 1;
  }
}

int cmd_mu_sweep(const RunConfig& cfg) {
  if (cfg.n_points < 2) return usage_error("--n-points must be at least 2");
  try {
    CsvBuilder csv;
    csv.comment(std::string("irtr mu-sweep") +
                kv_int("n_points", cfg.n_points) +
                kv_int("seed", static_cast<long long>(cfg.seed)) +
                " version=" + kVersion);
    csv.header({"mu", "e_equal"});
    for (int i = 0; i < cfg.n_points; ++i) {
      const double mu = static_cast<double>(i) / (cfg.n_points - 1);
      csv.row({mu, equal_weight_error(mu)});
    }
    return emit(cfg, csv);
  } catch (const Error& err) {
    std::cerr << "irtr: " << err.what() << "\n";
    return 1;
  }
}

int cmd_gw_frontier(const RunConfig& cfg) {
  if (!(cfg.omega_hz > 0.0)) return usage_error("--omega-hz must be positive");
  if (!(cfg.gamma_hz > 0.0)) return usage_error("--gamma-hz must be positive");
  if (!(cfg.t_sec > 0.0)) return usage_error("--t-sec must be positive");
  if (!(cfg.norm > 0.0)) return usage_error("--norm must be positive");
  if (cfg.n_points < 2) return usage_error("--n-points must be at least 2");
  if (!cfg.delta_hz.empty() && !cfg.delta_over_omega.empty())
    return usage_error("give either --delta or --delta-over-omega, not both");

  std::vector<double> deltas = cfg.delta_hz;
  for (const double frac : cfg.delta_over_omega)
    deltas.push_back(frac * cfg.omega_hz);
  if (deltas.empty())
    deltas = {0.0, 0.4 * cfg.omega_hz, 0.6 * cfg.omega_hz,
              0.8 * cfg.omega_hz};
  for (const double d : deltas)
    if (!(d >= 0.0)) return usage_error("detunings must be non-negative");

  try {
    CsvBuilder csv;
    std::string meta = std::string("irtr gw-frontier") +
                       kv("omega_hz", cfg.omega_hz) +
                       kv("gamma_hz", cfg.gamma_hz) + kv("t_sec", cfg.t_sec) +
                       kv("norm", cfg.norm) + kv_int("n_points", cfg.n_points) +
                       kv_int("seed", static_cast<long long>(cfg.seed)) +
                       " version=" + kVersion;
    csv.comment(meta);
    csv.header({"delta_hz", "mu", "s_a", "s_b"});
    for (const double delta : deltas) {
      const DetunedConfig dc{cfg.omega_hz, delta, cfg.gamma_hz, cfg.t_sec,
                             cfg.norm};
      const double mu = mu_detuned(dc);
      const SensitivityPoint qcrb = individual_qcrb_sensitivity(dc);
      csv.comment("delta_hz=" + format_double(delta) +
                  " mu=" + format_double(mu) +
                  " s_qcrb=" + format_double(qcrb.s_a));
      for (const SensitivityPoint& pt :
           sensitivity_frontier(dc, cfg.n_points))
        csv.row({delta, mu, pt.s_a, pt.s_b});
    }
    return emit(cfg, csv);
  } catch (const Error& err) {
    std::cerr << "irtr: " << err.what() << "\n";
    return 1;
  }
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions opts;
  opts.fast = cfg.fast;
  opts.inject_fault = cfg.inject_fault;
  opts.seed = cfg.seed;
  int failures = 0;
  for (const CheckResult& check : run_verification(opts)) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << ": "
              << check.detail << "\n";
    if (!check.passed) ++failures;
  }
  if (failures == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << failures << " check(s) failed\n";
  return 1;
}

}  // namespace irtr::cli
