#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace irtr::cli {

/// Options shared by every subcommand; each command validates the fields it
/// uses and ignores the rest.
struct RunConfig {
  double mu = 0.9;
  double w = 0.5;

  // gw-frontier inputs
  double omega_hz = 0.0;
  double gamma_hz = 0.0;
  double t_sec = 0.0;
  double norm = 0.0;
  std::vector<double> delta_hz;          ///< absolute detunings
  std::vector<double> delta_over_omega;  ///< detunings as fractions of omega

  /// protocol-sim phases; empty means five phases spread evenly over the
  /// saturation region.
  std::vector<double> phi;

  int n_points = 200;
  int n_samples = 100000;
  std::uint64_t seed = 1;
  std::string out_path;  ///< empty writes to stdout
  bool emit_plot_script = false;
  bool fast = false;
  bool inject_fault = false;
};

// Exit codes: 0 success, 1 runtime or verification failure, 2 usage error.
int cmd_boundary(const RunConfig& cfg);
int cmd_holevo(const RunConfig& cfg);
int cmd_phi_scan(const RunConfig& cfg);
int cmd_protocol_sim(const RunConfig& cfg);
int cmd_mu_sweep(const RunConfig& cfg);
int cmd_gw_frontier(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

}  // namespace irtr::cli
