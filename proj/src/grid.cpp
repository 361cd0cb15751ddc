#include "vmsim/grid.hpp"

#include <cmath>
#include <string>

#include "vmsim/errors.hpp"

namespace vmsim {

static void check_axis(const char* name, double lo, double hi, int n) {
  if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi))
    throw_config(std::string("grid: ") + name + " extent must be finite with min < max");
  if (n < 4)
    throw_config(std::string("grid: ") + name + " needs at least 4 cells");
}

PhaseGrid PhaseGrid::make(double x_min, double x_max, int n_x,
                          double v1_min, double v1_max, int n_v1,
                          double v2_min, double v2_max, int n_v2) {
  check_axis("x", x_min, x_max, n_x);
  check_axis("v1", v1_min, v1_max, n_v1);
  check_axis("v2", v2_min, v2_max, n_v2);
  if (v2_min != -v2_max)
    throw_config("grid: v2 extent must be symmetric (v2_min = -v2_max)");

  PhaseGrid g;
  g.x_min = x_min; g.x_max = x_max; g.n_x = n_x;
  g.v1_min = v1_min; g.v1_max = v1_max; g.n_v1 = n_v1;
  g.v2_min = v2_min; g.v2_max = v2_max; g.n_v2 = n_v2;
  g.dx = (x_max - x_min) / n_x;
  g.dv1 = (v1_max - v1_min) / n_v1;
  g.dv2 = (v2_max - v2_min) / n_v2;

  g.x_node.resize(n_x + 1);
  for (int i = 0; i <= n_x; ++i) g.x_node[i] = x_min + i * g.dx;
  g.v1_node.resize(n_v1 + 1);
  for (int j = 0; j <= n_v1; ++j) g.v1_node[j] = v1_min + j * g.dv1;

  // lower half sampled, upper half mirrored so pairs negate exactly
  g.v2_node.resize(n_v2 + 1);
  for (int k = 0; 2 * k < n_v2; ++k) g.v2_node[k] = v2_min + k * g.dv2;
  if (n_v2 % 2 == 0) g.v2_node[n_v2 / 2] = 0.0;
  for (int k = 0; 2 * k < n_v2; ++k) g.v2_node[n_v2 - k] = -g.v2_node[k];
  return g;
}

PhaseGrid PhaseGrid::refined() const {
  return make(x_min, x_max, 2 * n_x, v1_min, v1_max, 2 * n_v1,
              v2_min, v2_max, 2 * n_v2);
}

}  // namespace vmsim
