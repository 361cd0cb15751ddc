#pragma once

#include <vector>

namespace vmsim {

/* Transverse fields are stored as the transported pair rp = E2 + B and
 * lm = E2 - B. With dt = dx the update is an exact one-node shift plus a
 * half-node source average, so a source-free pair translates bitwise and
 * picks up no numerical dispersion. E2, B and the potential A are derived
 * from the pair once per advance. */
struct FieldState {
  double dx = 0.0;
  double time = 0.0;
  std::vector<double> e1, rp, lm;
  std::vector<double> e2, b, a;  // derived

  static FieldState zero(int n_nodes, double dx);
  static FieldState from_components(const std::vector<double>& e1,
                                    const std::vector<double>& e2,
                                    const std::vector<double>& b,
                                    double dx, double time);
  void refresh_derived();
  int n_nodes() const { return static_cast<int>(e1.size()); }
};

// cumulative trapezoid of rho anchored at x_min; requires discrete
// neutrality: |integral of rho| <= tol_rel * max(1, integral of |rho|)
std::vector<double> init_E1_from_gauss(const std::vector<double>& rho,
                                       double dx, double tol_rel);

// one-node light-cone shift with half-node source averages; requires dt == dx
void advance_lightcone(FieldState& s, const std::vector<double>& j2_mid, double dt);
void advance_e1_ampere(std::vector<double>& e1, const std::vector<double>& j1_mid,
                       double dt);

std::vector<double> compute_A(const std::vector<double>& b, double dx);

double field_energy(const FieldState& s);

// max over interior nodes of |d2t A - d2x A - j2| at the middle time level
double wave_residual_A(const std::vector<double>& a_prev,
                       const std::vector<double>& a_cur,
                       const std::vector<double>& a_next,
                       const std::vector<double>& j2_cur,
                       double dt, double dx);

// boundary-node field magnitude check (compact support enforcement)
void check_field_boundary(const FieldState& s, double threshold);

}  // namespace vmsim
