#pragma once

#include <vector>

namespace vmsim {

/* Uniform tensor grid over (x, v1, v2), sampled at cell nodes. n_* count
 * cells, so each axis carries n_* + 1 nodes. The v2 axis is required to be
 * symmetric about zero and its nodes are built as exact +/- pairs:
 * v2_node[n_v2 - k] is the bitwise negation of v2_node[k]. Quadrature and
 * parity checks rely on that pairing. */
struct PhaseGrid {
  double x_min = 0, x_max = 0;
  double v1_min = 0, v1_max = 0;
  double v2_min = 0, v2_max = 0;
  int n_x = 0, n_v1 = 0, n_v2 = 0;
  double dx = 0, dv1 = 0, dv2 = 0;
  std::vector<double> x_node, v1_node, v2_node;

  static PhaseGrid make(double x_min, double x_max, int n_x,
                        double v1_min, double v1_max, int n_v1,
                        double v2_min, double v2_max, int n_v2);

  int nx_nodes() const { return n_x + 1; }
  int nv1_nodes() const { return n_v1 + 1; }
  int nv2_nodes() const { return n_v2 + 1; }
  int mirror_v2(int k) const { return n_v2 - k; }

  // doubled cell counts, same extents; node set contains the coarse nodes
  PhaseGrid refined() const;

  // trapezoid weight on a node line of n_cells + 1 nodes
  static double trapezoid_weight(int idx, int n_cells, double spacing) {
    return (idx == 0 || idx == n_cells) ? 0.5 * spacing : spacing;
  }
};

}  // namespace vmsim
