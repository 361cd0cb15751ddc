#pragma once

#include <string>

#include "vmsim/config.hpp"

namespace vmsim {

struct RunSummary {
  int n_steps = 0;
  double t_final = 0.0;          // realized final time, n_steps * dx
  double energy_drift_rel = 0.0; // full and vp1d modes
  double charge_drift_rel = 0.0;
  double max_df = 0.0;           // cross-validate mode
  double max_de1 = 0.0;
  double orbit_max_drift = 0.0;  // orbit-audit mode
  double orbit_max_moc_error = 0.0;
  double orbit_min_v1_gap = 0.0;
};

// Orchestrates one run into `out_dir`: manifest first, then per-step
// diagnostics, optional snapshots, mode-specific reports, and a final
// status file. On abort the status file records the reason before the
// error propagates to the caller.
RunSummary run_simulation(const RunConfig& cfg, const std::string& out_dir,
                          int threads);

// Columnar plot data extracted from a finished run directory. Quantities:
// any diagnostics column name, total_energy, E1_xt, E2_xt, B_xt, A_xt,
// rho_xt, marginal_x_v1 (the last four need snapshots). Empty out_path
// writes to stdout.
void emit_plot_data(const std::string& run_dir, const std::string& quantity,
                    const std::string& out_path);

}  // namespace vmsim
