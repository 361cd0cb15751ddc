#pragma once

#include <utility>
#include <vector>

#include "vmsim/distribution.hpp"

namespace vmsim {

// Sum of term(k) over the v2 node line, accumulated as exact +/- pairs
// (k, n - k). Mirroring the data reorders each pair, and IEEE addition is
// commutative, so the result is bitwise invariant under the v2 mirror.
template <class Term>
double mirror_pair_sum(int n_v2_cells, Term term) {
  double acc = 0.0;
  for (int k = 0; 2 * k < n_v2_cells; ++k) acc += term(k) + term(n_v2_cells - k);
  if (n_v2_cells % 2 == 0) acc += term(n_v2_cells / 2);
  return acc;
}

struct Moments {
  std::vector<double> rho;  // charge density including -b
  std::vector<double> j1, j2;
};

// trapezoid velocity quadrature on nodes; with `relativistic` the current
// integrand uses the mapped velocity
Moments compute_moments(const DistributionFunction& f, const Background& b,
                        bool relativistic = false, int threads = 1);

double total_charge(const DistributionFunction& f);
double kinetic_energy(const DistributionFunction& f);

std::pair<double, double> velocity_map(double v1, double v2, bool relativistic);

}  // namespace vmsim
