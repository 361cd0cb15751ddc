#include "vmsim/distribution.hpp"

#include <cmath>
#include <cstdio>

#include "vmsim/errors.hpp"

namespace vmsim {

DistributionFunction sample_initial_distribution(const PhaseGrid& g,
                                                 const ProfileSpec& p) {
  DistributionFunction f(g);
  for (int i = 0; i <= g.n_x; ++i)
    for (int j = 0; j <= g.n_v1; ++j) {
      double* line = f.values.line_v2(i, j);
      for (int k = 0; k <= g.n_v2; ++k)
        line[k] = profile_eval(p, g.x_node[i], g.v1_node[j], g.v2_node[k]);
    }
  try {
    check_support_boundary(f, 0.0);
  } catch (const SimError&) {
    throw_config(
        "profile support must fit strictly inside the grid box "
        "(outermost node layer must sample to zero)");
  }
  return f;
}

Background sample_background(const PhaseGrid& g, const BumpSpec& spec,
                             bool neutralize, double f_total) {
  Background bg;
  bg.values = sample_bump(spec, g.x_node);
  if (bg.values.front() != 0.0 || bg.values.back() != 0.0)
    throw_config("background support must fit strictly inside the grid box");
  double total = 0.0;
  for (int i = 0; i <= g.n_x; ++i)
    total += PhaseGrid::trapezoid_weight(i, g.n_x, g.dx) * bg.values[i];
  if (neutralize) {
    if (total == 0.0) {
      if (f_total != 0.0)
        throw_config("cannot neutralize: background integrates to zero");
      bg.total = 0.0;
      return bg;
    }
    double scale = f_total / total;
    if (scale < 0.0) throw_config("cannot neutralize: sign mismatch");
    for (double& v : bg.values) v *= scale;
    bg.total = 0.0;
    for (int i = 0; i <= g.n_x; ++i)
      bg.total += PhaseGrid::trapezoid_weight(i, g.n_x, g.dx) * bg.values[i];
  } else {
    bg.total = total;
  }
  return bg;
}

double max_abs(const DistributionFunction& f) {
  double m = 0.0;
  for (double v : f.values.data) m = std::max(m, std::fabs(v));
  return m;
}

double clamp_negative(DistributionFunction& f, double floor_abs) {
  const PhaseGrid& g = f.grid;
  double clamped = 0.0;
  for (int i = 0; i <= g.n_x; ++i) {
    double wx = PhaseGrid::trapezoid_weight(i, g.n_x, g.dx);
    for (int j = 0; j <= g.n_v1; ++j) {
      double wxv = wx * PhaseGrid::trapezoid_weight(j, g.n_v1, g.dv1);
      double* line = f.values.line_v2(i, j);
      for (int k = 0; k <= g.n_v2; ++k) {
        double v = line[k];
        if (v < 0.0) {
          if (v < -floor_abs) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "negative value %.3e at node (%d,%d,%d) below clamp floor %.3e",
                          v, i, j, k, floor_abs);
            throw_numerical(buf);
          }
          clamped += wxv * PhaseGrid::trapezoid_weight(k, g.n_v2, g.dv2) * (-v);
          line[k] = 0.0;
        }
      }
    }
  }
  return clamped;
}

void check_support_boundary(const DistributionFunction& f, double threshold) {
  const PhaseGrid& g = f.grid;
  auto fail = [&](int i, int j, int k) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "support reached the grid boundary: |f| = %.3e at node (%d,%d,%d)",
                  std::fabs(f.values(i, j, k)), i, j, k);
    throw_support(buf);
  };
  auto over = [&](int i, int j, int k) {
    return std::fabs(f.values(i, j, k)) > threshold;
  };
  for (int j = 0; j <= g.n_v1; ++j)
    for (int k = 0; k <= g.n_v2; ++k) {
      if (over(0, j, k)) fail(0, j, k);
      if (over(g.n_x, j, k)) fail(g.n_x, j, k);
    }
  for (int i = 0; i <= g.n_x; ++i)
    for (int k = 0; k <= g.n_v2; ++k) {
      if (over(i, 0, k)) fail(i, 0, k);
      if (over(i, g.n_v1, k)) fail(i, g.n_v1, k);
    }
  for (int i = 0; i <= g.n_x; ++i)
    for (int j = 0; j <= g.n_v1; ++j) {
      if (over(i, j, 0)) fail(i, j, 0);
      if (over(i, j, g.n_v2)) fail(i, j, g.n_v2);
    }
}

double sym_error_v2(const DistributionFunction& f) {
  const PhaseGrid& g = f.grid;
  double m = 0.0;
  for (int i = 0; i <= g.n_x; ++i)
    for (int j = 0; j <= g.n_v1; ++j) {
      const double* line = f.values.line_v2(i, j);
      for (int k = 0; 2 * k < g.n_v2; ++k)
        m = std::max(m, std::fabs(line[k] - line[g.n_v2 - k]));
    }
  return m;
}

DistributionFunction mirror_v2(const DistributionFunction& f) {
  DistributionFunction out(f.grid);
  out.time = f.time;
  const PhaseGrid& g = f.grid;
  for (int i = 0; i <= g.n_x; ++i)
    for (int j = 0; j <= g.n_v1; ++j) {
      const double* src = f.values.line_v2(i, j);
      double* dst = out.values.line_v2(i, j);
      for (int k = 0; k <= g.n_v2; ++k) dst[k] = src[g.n_v2 - k];
    }
  return out;
}

}  // namespace vmsim
