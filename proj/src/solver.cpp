#include "vmsim/solver.hpp"

#include <cmath>
#include <cstdio>

#include "vmsim/errors.hpp"
#include "vmsim/parallel.hpp"
#include "vmsim/spline.hpp"

namespace vmsim {

namespace {

double vhat1(double v1, double v2) {
  return v1 / std::sqrt(1.0 + v1 * v1 + v2 * v2);
}
double vhat2(double v1, double v2) {
  return v2 / std::sqrt(1.0 + v1 * v1 + v2 * v2);
}

void check_cfl(const char* sweep, double max_k, double dt, double dv,
               double cfl_factor) {
  if (!std::isfinite(max_k))
    throw_numerical(std::string("non-finite force in the ") + sweep + " sweep");
  if (!(max_k * dt <= cfl_factor * dv)) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "CFL violation in the %s sweep: max|K| = %.6e, limit %.6e",
                  sweep, max_k, cfl_factor * dv / dt);
    throw_numerical(buf);
  }
}

}  // namespace

void advect_x(DistributionFunction& f, double interval, bool relativistic,
              int threads) {
  const PhaseGrid& g = f.grid;
  const int nx = g.nx_nodes(), nv1 = g.nv1_nodes(), nv2 = g.nv2_nodes();
  const std::size_t stride = std::size_t(nv1) * nv2;
  double* base = f.values.data.data();

  parallel_chunks(std::size_t(nv1) * nv2, threads,
                  [&](std::size_t, std::size_t lb, std::size_t le) {
    SplineWorkspace ws;
    std::vector<double> in(nx), out(nx);
    for (std::size_t m = lb; m < le; ++m) {
      int j = static_cast<int>(m / nv2);
      int k = static_cast<int>(m % nv2);
      double v = relativistic ? vhat1(g.v1_node[j], g.v2_node[k]) : g.v1_node[j];
      double shift_cells = v * interval / g.dx;
      double* p = base + m;
      for (int i = 0; i < nx; ++i) in[i] = p[i * stride];
      advect_line(in.data(), nx, shift_cells, out.data(), ws);
      for (int i = 0; i < nx; ++i) p[i * stride] = out[i];
    }
  });
}

void advect_v1(DistributionFunction& f, const std::vector<double>& e1_kick,
               const std::vector<double>& b_mid, double dt, bool relativistic,
               int threads) {
  const PhaseGrid& g = f.grid;
  const int nx = g.nx_nodes(), nv1 = g.nv1_nodes(), nv2 = g.nv2_nodes();
  const std::size_t stride = nv2;
  double* base = f.values.data.data();

  parallel_chunks(std::size_t(nx) * nv2, threads,
                  [&](std::size_t, std::size_t lb, std::size_t le) {
    SplineWorkspace ws;
    std::vector<double> in(nv1), out(nv1), feet(relativistic ? nv1 : 0);
    for (std::size_t m = lb; m < le; ++m) {
      int i = static_cast<int>(m / nv2);
      int k = static_cast<int>(m % nv2);
      double* p = base + std::size_t(i) * nv1 * nv2 + k;
      for (int j = 0; j < nv1; ++j) in[j] = p[j * stride];
      if (!relativistic) {
        double k1 = e1_kick[i] + g.v2_node[k] * b_mid[i];
        advect_line(in.data(), nv1, dt * k1 / g.dv1, out.data(), ws);
      } else {
        for (int j = 0; j < nv1; ++j) {
          double k1 = e1_kick[i] + vhat2(g.v1_node[j], g.v2_node[k]) * b_mid[i];
          feet[j] = dt * k1 / g.dv1;
        }
        advect_line_feet(in.data(), nv1, feet.data(), out.data(), ws);
      }
      for (int j = 0; j < nv1; ++j) p[j * stride] = out[j];
    }
  });
}

void advect_v2(DistributionFunction& f, const std::vector<double>& e2_mid,
               const std::vector<double>& b_mid, double dt, bool relativistic,
               int threads) {
  const PhaseGrid& g = f.grid;
  const int nx = g.nx_nodes(), nv1 = g.nv1_nodes(), nv2 = g.nv2_nodes();

  parallel_chunks(std::size_t(nx) * nv1, threads,
                  [&](std::size_t, std::size_t lb, std::size_t le) {
    SplineWorkspace ws;
    std::vector<double> out(nv2), feet(relativistic ? nv2 : 0);
    for (std::size_t m = lb; m < le; ++m) {
      int i = static_cast<int>(m / nv1);
      int j = static_cast<int>(m % nv1);
      double* line = f.values.line_v2(i, j);
      if (!relativistic) {
        double k2 = e2_mid[i] - g.v1_node[j] * b_mid[i];
        advect_line_symmetric(line, nv2, dt * k2 / g.dv2, out.data(), ws);
      } else {
        for (int k = 0; k < nv2; ++k) {
          double k2 = e2_mid[i] - vhat1(g.v1_node[j], g.v2_node[k]) * b_mid[i];
          feet[k] = dt * k2 / g.dv2;
        }
        advect_line_feet_symmetric(line, nv2, feet.data(), out.data(), ws);
      }
      for (int k = 0; k < nv2; ++k) line[k] = out[k];
    }
  });
}

StepReport step_strang(DistributionFunction& f, FieldState& fields,
                       const Background& bg, double dt, const StepOptions& opt) {
  const PhaseGrid& g = f.grid;
  if (dt != g.dx) throw_config("step_strang requires dt == dx");
  if (fields.n_nodes() != g.nx_nodes())
    throw_config("step_strang: field grid mismatch");

  StepReport rep;
  advect_x(f, 0.5 * dt, opt.relativistic, opt.threads);

  rep.mid = compute_moments(f, bg, opt.relativistic, opt.threads);
  rep.e1_kick = init_E1_from_gauss(rep.mid.rho, g.dx, opt.neutrality_tol);

  std::vector<double> e2_old = fields.e2, b_old = fields.b;
  advance_lightcone(fields, rep.mid.j2, dt);
  advance_e1_ampere(fields.e1, rep.mid.j1, dt);
  fields.refresh_derived();
  fields.time += dt;

  const int nx = g.nx_nodes();
  std::vector<double> e2_mid(nx), b_mid(nx);
  for (int i = 0; i < nx; ++i) {
    e2_mid[i] = 0.5 * (e2_old[i] + fields.e2[i]);
    b_mid[i] = 0.5 * (b_old[i] + fields.b[i]);
  }

  // force bounds before the sweeps; workers must not throw
  double mk1 = 0.0, mk2 = 0.0;
  if (!opt.relativistic) {
    for (int i = 0; i < nx; ++i) {
      for (int k = 0; k <= g.n_v2; ++k)
        mk1 = std::max(mk1, std::fabs(rep.e1_kick[i] + g.v2_node[k] * b_mid[i]));
      for (int j = 0; j <= g.n_v1; ++j)
        mk2 = std::max(mk2, std::fabs(e2_mid[i] - g.v1_node[j] * b_mid[i]));
    }
  } else {
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j <= g.n_v1; ++j)
        for (int k = 0; k <= g.n_v2; ++k) {
          double h1 = vhat1(g.v1_node[j], g.v2_node[k]);
          double h2 = vhat2(g.v1_node[j], g.v2_node[k]);
          mk1 = std::max(mk1, std::fabs(rep.e1_kick[i] + h2 * b_mid[i]));
          mk2 = std::max(mk2, std::fabs(e2_mid[i] - h1 * b_mid[i]));
        }
  }
  rep.max_k1 = mk1;
  rep.max_k2 = mk2;
  check_cfl("v1", mk1, dt, g.dv1, opt.cfl_factor);
  check_cfl("v2", mk2, dt, g.dv2, opt.cfl_factor);

  advect_v1(f, rep.e1_kick, b_mid, dt, opt.relativistic, opt.threads);
  advect_v2(f, e2_mid, b_mid, dt, opt.relativistic, opt.threads);
  advect_x(f, 0.5 * dt, opt.relativistic, opt.threads);

  rep.clamped_mass = clamp_negative(f, opt.negative_floor);
  if (opt.check_support) check_support_boundary(f, opt.support_threshold);
  f.time += dt;
  return rep;
}

}  // namespace vmsim
