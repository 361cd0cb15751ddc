#pragma once

#include <string>

#include "vmsim/distribution.hpp"
#include "vmsim/fields.hpp"

namespace vmsim {

// Flat little-endian binary container. Layout:
//   6 x f64   x_min, x_max, v1_min, v1_max, v2_min, v2_max
//   3 x u64   n_x, n_v1, n_v2 (cell counts)
//   1 x f64   time
//   f values  (n_x+1)(n_v1+1)(n_v2+1) x f64, row-major (i_x, i_v1, i_v2)
//   fields    E1, E2, B, A blocks, each (n_x+1) x f64

struct SnapshotData {
  PhaseGrid grid;
  double time = 0.0;
  Array3 f{1, 1, 1};
  std::vector<double> e1, e2, b, a;
};

void write_snapshot(const std::string& path, const DistributionFunction& f,
                    const FieldState& fields);
SnapshotData read_snapshot(const std::string& path);

}  // namespace vmsim
