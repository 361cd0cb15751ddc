#include "vmsim/moments.hpp"

#include <cmath>

#include "vmsim/errors.hpp"
#include "vmsim/parallel.hpp"

namespace vmsim {

Moments compute_moments(const DistributionFunction& f, const Background& b,
                        bool relativistic, int threads) {
  const PhaseGrid& g = f.grid;
  const int nx = g.nx_nodes();
  if (static_cast<int>(b.values.size()) != nx)
    throw_numerical("compute_moments: background size mismatch");

  Moments m;
  m.rho.assign(nx, 0.0);
  m.j1.assign(nx, 0.0);
  m.j2.assign(nx, 0.0);

  parallel_chunks(static_cast<std::size_t>(nx), threads,
                  [&](std::size_t, std::size_t ib, std::size_t ie) {
    for (std::size_t iu = ib; iu < ie; ++iu) {
      int i = static_cast<int>(iu);
      double rho = 0.0, j1 = 0.0, j2 = 0.0;
      for (int j = 0; j <= g.n_v1; ++j) {
        double wv1 = PhaseGrid::trapezoid_weight(j, g.n_v1, g.dv1);
        double v1 = g.v1_node[j];
        const double* line = f.values.line_v2(i, j);
        if (!relativistic) {
          double s = mirror_pair_sum(g.n_v2, [&](int k) {
            return PhaseGrid::trapezoid_weight(k, g.n_v2, g.dv2) * line[k];
          });
          double t = mirror_pair_sum(g.n_v2, [&](int k) {
            return PhaseGrid::trapezoid_weight(k, g.n_v2, g.dv2) * g.v2_node[k] * line[k];
          });
          rho += wv1 * s;
          j1 += wv1 * v1 * s;
          j2 += wv1 * t;
        } else {
          double s = mirror_pair_sum(g.n_v2, [&](int k) {
            return PhaseGrid::trapezoid_weight(k, g.n_v2, g.dv2) * line[k];
          });
          double u = mirror_pair_sum(g.n_v2, [&](int k) {
            double v2 = g.v2_node[k];
            double inv = 1.0 / std::sqrt(1.0 + v1 * v1 + v2 * v2);
            return PhaseGrid::trapezoid_weight(k, g.n_v2, g.dv2) * (v1 * inv) * line[k];
          });
          double t = mirror_pair_sum(g.n_v2, [&](int k) {
            double v2 = g.v2_node[k];
            double inv = 1.0 / std::sqrt(1.0 + v1 * v1 + v2 * v2);
            return PhaseGrid::trapezoid_weight(k, g.n_v2, g.dv2) * (v2 * inv) * line[k];
          });
          rho += wv1 * s;
          j1 += wv1 * u;
          j2 += wv1 * t;
        }
      }
      m.rho[i] = rho - b.values[i];
      m.j1[i] = j1;
      m.j2[i] = j2;
    }
  });
  return m;
}

double total_charge(const DistributionFunction& f) {
  const PhaseGrid& g = f.grid;
  double total = 0.0;
  for (int i = 0; i <= g.n_x; ++i) {
    double col = 0.0;
    for (int j = 0; j <= g.n_v1; ++j) {
      const double* line = f.values.line_v2(i, j);
      double s = mirror_pair_sum(g.n_v2, [&](int k) {
        return PhaseGrid::trapezoid_weight(k, g.n_v2, g.dv2) * line[k];
      });
      col += PhaseGrid::trapezoid_weight(j, g.n_v1, g.dv1) * s;
    }
    total += PhaseGrid::trapezoid_weight(i, g.n_x, g.dx) * col;
  }
  return total;
}

double kinetic_energy(const DistributionFunction& f) {
  const PhaseGrid& g = f.grid;
  double total = 0.0;
  for (int i = 0; i <= g.n_x; ++i) {
    double col = 0.0;
    for (int j = 0; j <= g.n_v1; ++j) {
      double v1sq = g.v1_node[j] * g.v1_node[j];
      const double* line = f.values.line_v2(i, j);
      double s = mirror_pair_sum(g.n_v2, [&](int k) {
        double v2 = g.v2_node[k];
        return PhaseGrid::trapezoid_weight(k, g.n_v2, g.dv2) * (v1sq + v2 * v2) * line[k];
      });
      col += PhaseGrid::trapezoid_weight(j, g.n_v1, g.dv1) * s;
    }
    total += PhaseGrid::trapezoid_weight(i, g.n_x, g.dx) * col;
  }
  return total;
}

std::pair<double, double> velocity_map(double v1, double v2, bool relativistic) {
  if (!relativistic) return {v1, v2};
  double inv = 1.0 / std::sqrt(1.0 + v1 * v1 + v2 * v2);
  return {v1 * inv, v2 * inv};
}

}  // namespace vmsim
