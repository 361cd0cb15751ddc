#include "vmsim/reduction.hpp"

#include <cmath>
#include <cstdio>

#include "vmsim/errors.hpp"
#include "vmsim/fields.hpp"

namespace vmsim {

void check_v2_even(const DistributionFunction& f) {
  const PhaseGrid& g = f.grid;
  for (int i = 0; i <= g.n_x; ++i) {
    for (int j = 0; j <= g.n_v1; ++j) {
      for (int k = 0; 2 * k < g.n_v2; ++k) {
        double lo = f.values(i, j, k);
        double hi = f.values(i, j, g.mirror_v2(k));
        if (lo != hi) {
          char msg[200];
          std::snprintf(msg, sizeof msg,
                        "initial state is not even in v2: f(%d,%d,%d) = %.17g "
                        "but f(%d,%d,%d) = %.17g",
                        i, j, k, lo, i, j, g.mirror_v2(k), hi);
          throw_config(msg);
        }
      }
    }
  }
}

StepReport step_vp(VPState& st, const Background& bg, double dt,
                   const StepOptions& opt) {
  DistributionFunction& f = st.f;
  const PhaseGrid& g = f.grid;
  if (opt.relativistic)
    throw_config("the reduced solver is nonrelativistic");
  if (dt != g.dx) throw_config("the reduced solver requires dt == dx exactly");

  StepReport rep;
  advect_x(f, 0.5 * dt, false, opt.threads);
  rep.mid = compute_moments(f, bg, false, opt.threads);
  rep.e1_kick = init_E1_from_gauss(rep.mid.rho, g.dx, opt.neutrality_tol);
  st.e1 = rep.e1_kick;

  double mk1 = 0.0;
  for (double e : rep.e1_kick) {
    double m = std::fabs(e);
    if (m > mk1) mk1 = m;
  }
  rep.max_k1 = mk1;
  if (!(mk1 * dt <= opt.cfl_factor * g.dv1)) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "v1 sweep violates the shift cap: max |E1| = %.6g exceeds %.6g",
                  mk1, opt.cfl_factor * g.dv1 / dt);
    throw_numerical(msg);
  }

  std::vector<double> zeros(g.n_x + 1, 0.0);
  advect_v1(f, rep.e1_kick, zeros, dt, false, opt.threads);
  advect_x(f, 0.5 * dt, false, opt.threads);

  rep.clamped_mass = clamp_negative(f, opt.negative_floor);
  if (opt.check_support) check_support_boundary(f, opt.support_threshold);
  f.time += dt;
  return rep;
}

CrossValidationReport cross_validate(const DistributionFunction& f0,
                                     const Background& bg, double dt,
                                     int n_steps, int stride,
                                     const StepOptions& opt) {
  check_v2_even(f0);
  if (stride < 1) throw_config("cross-validation stride must be positive");
  const PhaseGrid& g = f0.grid;

  DistributionFunction full = f0;
  Moments mom0 = compute_moments(f0, bg, false, opt.threads);
  std::vector<double> e1_0 =
      init_E1_from_gauss(mom0.rho, g.dx, opt.neutrality_tol);
  std::vector<double> zeros(g.n_x + 1, 0.0);
  FieldState fields = FieldState::from_components(e1_0, zeros, zeros, g.dx, 0.0);

  VPState vp(f0);
  vp.e1 = e1_0;

  CrossValidationReport report;
  auto compare = [&](double t) {
    CrossValidationRow row;
    row.time = t;
    const Array3& a = full.values;
    const Array3& b = vp.f.values;
    for (int i = 0; i <= g.n_x; ++i) {
      double wx = PhaseGrid::trapezoid_weight(i, g.n_x, g.dx);
      for (int j = 0; j <= g.n_v1; ++j) {
        double wv1 = PhaseGrid::trapezoid_weight(j, g.n_v1, g.dv1);
        for (int k = 0; k <= g.n_v2; ++k) {
          double d = std::fabs(a(i, j, k) - b(i, j, k));
          if (d > row.max_df) row.max_df = d;
          row.l1_df +=
              wx * wv1 * PhaseGrid::trapezoid_weight(k, g.n_v2, g.dv2) * d;
        }
      }
    }
    // stored Ampere field against the Gauss field of the reduced state at
    // the same integer time
    Moments mv = compute_moments(vp.f, bg, false, opt.threads);
    std::vector<double> e1_gauss =
        init_E1_from_gauss(mv.rho, g.dx, opt.neutrality_tol);
    for (int i = 0; i <= g.n_x; ++i) {
      double d = std::fabs(fields.e1[i] - e1_gauss[i]);
      if (d > row.max_de1) row.max_de1 = d;
      row.l1_de1 += PhaseGrid::trapezoid_weight(i, g.n_x, g.dx) * d;
    }
    report.rows.push_back(row);
    if (row.max_df > report.max_df) report.max_df = row.max_df;
    if (row.l1_df > report.l1_df) report.l1_df = row.l1_df;
    if (row.max_de1 > report.max_de1) report.max_de1 = row.max_de1;
  };

  compare(0.0);
  for (int step = 1; step <= n_steps; ++step) {
    step_strang(full, fields, bg, dt, opt);
    step_vp(vp, bg, dt, opt);
    if (step % stride == 0 || step == n_steps) compare(full.time);
  }
  return report;
}

}  // namespace vmsim
