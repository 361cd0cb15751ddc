#pragma once

#include <string>
#include <vector>

#include "vmsim/distribution.hpp"
#include "vmsim/fields.hpp"
#include "vmsim/moments.hpp"

namespace vmsim {

struct DiagnosticsOptions {
  std::vector<double> epsilons{0.05, 0.1, 0.2, 0.4};
  double support_threshold = 0.0;  // nodes with f above this count as support
};

struct DiagnosticsRecord {
  double time = 0.0;
  double kinetic_energy = 0.0;
  double field_energy = 0.0;
  double total_charge = 0.0;
  double q_support = 1.0;      // 1 + sup |v| over the numerical support
  double sup_a = 0.0;          // max |A| over x nodes
  double gauss_residual = 0.0; // max |dx E1 - rho| (centered differences)
  double sym_error = 0.0;      // max |f(v2) - f(-v2)| over mirror node pairs
  double min_v1_gap = 0.0;     // min | |v1| - 1 | over the numerical support
  std::vector<double> seps_sup;  // sup of |f_x| + |grad_v f| on S_eps, per eps
};

DiagnosticsRecord record_diagnostics(const DistributionFunction& f,
                                     const FieldState& fields,
                                     const Background& bg,
                                     const DiagnosticsOptions& opt);

// largest relative excursion of total energy from its first-record value
double energy_drift(const std::vector<DiagnosticsRecord>& records);

std::string diagnostics_csv_header(const DiagnosticsOptions& opt);
std::string diagnostics_csv_row(const DiagnosticsRecord& rec);
void write_diagnostics_csv(const std::string& path,
                           const DiagnosticsOptions& opt,
                           const std::vector<DiagnosticsRecord>& records);

}  // namespace vmsim
