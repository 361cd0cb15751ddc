#pragma once

#include <vector>

#include "vmsim/distribution.hpp"
#include "vmsim/fields.hpp"
#include "vmsim/moments.hpp"

namespace vmsim {

struct StepOptions {
  double cfl_factor = 1.0;         // velocity shifts capped at cfl_factor cells
  double negative_floor = 1e-12;   // clamp window [-floor, 0)
  double support_threshold = 0.0;  // absolute boundary-layer threshold for f
  bool check_support = true;
  bool relativistic = false;
  double neutrality_tol = 1e-10;
  int threads = 1;
};

struct StepReport {
  Moments mid;                  // moments of the half-advected state
  std::vector<double> e1_kick;  // Gauss field used for the v1 sweep
  double max_k1 = 0.0, max_k2 = 0.0;
  double clamped_mass = 0.0;
};

/* One Strang step x/v/x with dt = dx:
 *   half x-advection, mid moments, field advance with mid currents,
 *   v1 then v2 sweeps against frozen mid fields, half x-advection,
 *   negative-value clamp and support-boundary check.
 * The v1 kick uses E1 recomputed from Gauss on the mid charge density; the
 * stored E1 advances through Ampere and is cross-checked by the Gauss
 * residual diagnostic. The v2 sweep runs in its reversal-averaged form, so
 * the step commutes bitwise with the v2 mirror. */
StepReport step_strang(DistributionFunction& f, FieldState& fields,
                       const Background& bg, double dt, const StepOptions& opt);

// building blocks, shared with the reduced solver
void advect_x(DistributionFunction& f, double interval, bool relativistic,
              int threads);
void advect_v1(DistributionFunction& f, const std::vector<double>& e1_kick,
               const std::vector<double>& b_mid, double dt, bool relativistic,
               int threads);
void advect_v2(DistributionFunction& f, const std::vector<double>& e2_mid,
               const std::vector<double>& b_mid, double dt, bool relativistic,
               int threads);

}  // namespace vmsim
