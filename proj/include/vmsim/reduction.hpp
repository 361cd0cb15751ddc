#pragma once

#include <vector>

#include "vmsim/distribution.hpp"
#include "vmsim/solver.hpp"

namespace vmsim {

// Reduced 1D Vlasov-Poisson solver. It reuses the full solver's sweeps
// verbatim with the transverse fields pinned to zero, so on data even in
// v2 the full step and the reduced step produce bitwise identical states.

struct VPState {
  DistributionFunction f;
  std::vector<double> e1;  // Gauss field of the latest mid-step density

  explicit VPState(const DistributionFunction& f0) : f(f0) {}
};

// throws a config error naming the first offending node pair
void check_v2_even(const DistributionFunction& f);

StepReport step_vp(VPState& st, const Background& bg, double dt,
                   const StepOptions& opt);

struct CrossValidationRow {
  double time = 0.0;
  double max_df = 0.0;   // max node difference of f, full vs reduced
  double l1_df = 0.0;    // quadrature-weighted L1 difference of f
  double max_de1 = 0.0;  // stored Ampere E1 vs Gauss field of the reduced run
  double l1_de1 = 0.0;
};

struct CrossValidationReport {
  std::vector<CrossValidationRow> rows;
  double max_df = 0.0;
  double l1_df = 0.0;
  double max_de1 = 0.0;
};

// Runs the full solver and the reduced solver side by side from the same
// initial state (which must be even in v2; transverse fields start at zero)
// and reports the discrepancies every `stride` steps and at the end.
CrossValidationReport cross_validate(const DistributionFunction& f0,
                                     const Background& bg, double dt,
                                     int n_steps, int stride,
                                     const StepOptions& opt);

}  // namespace vmsim
