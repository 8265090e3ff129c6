#include <CLI11.hpp>
#include <iostream>

#include "irtr/cli/commands.hpp"
#include "irtr/errors.hpp"
#include "irtr/version.hpp"

namespace {

using irtr::cli::RunConfig;

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out_path, "Output CSV path (default: stdout)");
  sub->add_flag("--emit-plot-script", cfg.emit_plot_script,
                "Also write a matplotlib script next to the CSV");
  sub->add_option("--seed", cfg.seed, "Seed for every stochastic step");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Precision limits for joint estimation of the two quadrature "
      "amplitudes of a monochromatic signal read out by a linear device"};
  app.set_version_flag("--version", irtr::kVersion);
  app.set_config("--config", "", "Optional key=value file; flags win");
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  RunConfig cfg;

  CLI::App* boundary =
      app.add_subcommand("boundary", "Tradeoff boundary in error space");
  boundary->add_option("--mu", cfg.mu, "Incompatibility in [0, 1]")
      ->required();
  boundary->add_option("--n-points", cfg.n_points, "Points along the curve");
  add_output_options(boundary, cfg);
  boundary->configurable();

  CLI::App* holevo = app.add_subcommand(
      "holevo", "Holevo bound, its line in error space and the tangency gap");
  holevo->add_option("--mu", cfg.mu, "Incompatibility in [0, 1]")->required();
  holevo->add_option("--w", cfg.w, "Weight in (0, 1)");
  holevo->add_option("--n-points", cfg.n_points, "Points along the line");
  add_output_options(holevo, cfg);
  holevo->configurable();

  CLI::App* phi_scan = app.add_subcommand(
      "phi-scan", "Regret-space tradeoff left side over the phase range");
  phi_scan->add_option("--mu", cfg.mu, "Incompatibility in [0, 1]")
      ->required();
  phi_scan->add_option("--n-points", cfg.n_points, "Phase grid size");
  add_output_options(phi_scan, cfg);
  phi_scan->configurable();

  CLI::App* protocol_sim = app.add_subcommand(
      "protocol-sim",
      "Monte-Carlo check that the measurement attains its Fisher limits");
  protocol_sim->add_option("--mu", cfg.mu, "Incompatibility in [0, 1]")
      ->required();
  protocol_sim->add_option(
      "--phi", cfg.phi,
      "Measurement phases (default: five across the saturation region)");
  protocol_sim->add_option("--n-samples", cfg.n_samples,
                           "Samples per phase (at least 100)");
  add_output_options(protocol_sim, cfg);
  protocol_sim->configurable();

  CLI::App* mu_sweep = app.add_subcommand(
      "mu-sweep", "Equal-weight boundary variance versus incompatibility");
  mu_sweep->add_option("--n-points", cfg.n_points, "Sweep grid size");
  add_output_options(mu_sweep, cfg);
  mu_sweep->configurable();

  CLI::App* gw_frontier = app.add_subcommand(
      "gw-frontier", "Sensitivity frontiers of a detuned interferometer");
  gw_frontier->add_option("--omega-hz", cfg.omega_hz, "Signal frequency")
      ->required();
  gw_frontier->add_option("--gamma-hz", cfg.gamma_hz, "Cavity bandwidth")
      ->required();
  gw_frontier->add_option("--t-sec", cfg.t_sec, "Integration time")
      ->required();
  gw_frontier
      ->add_option("--norm", cfg.norm, "Device amplitude normalization")
      ->required();
  gw_frontier->add_option("--delta", cfg.delta_hz, "Detunings (same unit)");
  gw_frontier->add_option("--delta-over-omega", cfg.delta_over_omega,
                          "Detunings as fractions of omega");
  gw_frontier->add_option("--n-points", cfg.n_points,
                          "Points along each frontier");
  add_output_options(gw_frontier, cfg);
  gw_frontier->configurable();

  CLI::App* verify = app.add_subcommand(
      "verify", "Run every cross-module consistency check");
  verify->add_flag("--fast", cfg.fast,
                   "Skip the Monte-Carlo checks, shrink the grids");
  verify->add_option("--seed", cfg.seed, "Seed for the randomized checks");
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");
  verify->configurable();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (boundary->parsed()) return irtr::cli::cmd_boundary(cfg);
    if (holevo->parsed()) return irtr::cli::cmd_holevo(cfg);
    if (phi_scan->parsed()) return irtr::cli::cmd_phi_scan(cfg);
    if (protocol_sim->parsed()) return irtr::cli::cmd_protocol_sim(cfg);
    if (mu_sweep->parsed()) return irtr::cli::cmd_mu_sweep(cfg);
    if (gw_frontier->parsed()) return irtr::cli::cmd_gw_frontier(cfg);
    if (verify->parsed()) return irtr::cli::cmd_verify(cfg);
  } catch (const irtr::Error& err) {
    std::cerr << "irtr: " << err.what() << "\n";
    return 1;
  }
  return 2;
}
