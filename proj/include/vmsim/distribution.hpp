#pragma once

#include <string>

#include "vmsim/array3.hpp"
#include "vmsim/grid.hpp"
#include "vmsim/profiles.hpp"

namespace vmsim {

// f >= 0 sampled on phase-space nodes; the outermost node layer stays zero
// for the lifetime of the object (support invariant).
struct DistributionFunction {
  PhaseGrid grid;
  Array3 values;
  double time = 0.0;

  explicit DistributionFunction(const PhaseGrid& g)
      : grid(g), values(g.nx_nodes(), g.nv1_nodes(), g.nv2_nodes()) {}
};

struct Background {
  std::vector<double> values;  // on x nodes, b >= 0
  double total = 0.0;          // trapezoid integral
};

DistributionFunction sample_initial_distribution(const PhaseGrid& g,
                                                 const ProfileSpec& p);

// b sampled from `spec`; with neutralize, rescaled so the discrete integral
// matches f_total exactly
Background sample_background(const PhaseGrid& g, const BumpSpec& spec,
                             bool neutralize, double f_total);

double max_abs(const DistributionFunction& f);

// zero values in [-floor, 0) and return the quadrature-weighted mass added;
// values below -floor abort
double clamp_negative(DistributionFunction& f, double floor_abs);

// throws when |f| on the outermost node layer exceeds the threshold
void check_support_boundary(const DistributionFunction& f, double threshold);

double sym_error_v2(const DistributionFunction& f);
DistributionFunction mirror_v2(const DistributionFunction& f);

}  // namespace vmsim
