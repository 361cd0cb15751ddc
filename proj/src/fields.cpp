#include "vmsim/fields.hpp"

#include <cmath>
#include <cstdio>

#include "vmsim/errors.hpp"

namespace vmsim {

FieldState FieldState::zero(int n_nodes, double dx) {
  FieldState s;
  s.dx = dx;
  s.e1.assign(n_nodes, 0.0);
  s.rp.assign(n_nodes, 0.0);
  s.lm.assign(n_nodes, 0.0);
  s.refresh_derived();
  return s;
}

FieldState FieldState::from_components(const std::vector<double>& e1,
                                       const std::vector<double>& e2,
                                       const std::vector<double>& b,
                                       double dx, double time) {
  if (e1.size() != e2.size() || e1.size() != b.size())
    throw_numerical("field arrays must share one spatial grid");
  FieldState s;
  s.dx = dx;
  s.time = time;
  s.e1 = e1;
  s.rp.resize(e1.size());
  s.lm.resize(e1.size());
  for (std::size_t i = 0; i < e1.size(); ++i) {
    s.rp[i] = e2[i] + b[i];
    s.lm[i] = e2[i] - b[i];
  }
  s.refresh_derived();
  return s;
}

void FieldState::refresh_derived() {
  const std::size_t n = rp.size();
  e2.resize(n);
  b.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    e2[i] = 0.5 * (rp[i] + lm[i]);
    b[i] = 0.5 * (rp[i] - lm[i]);
  }
  a = compute_A(b, dx);
}

std::vector<double> init_E1_from_gauss(const std::vector<double>& rho,
                                       double dx, double tol_rel) {
  const std::size_t n = rho.size();
  std::vector<double> e1(n);
  e1[0] = 0.0;
  double l1 = 0.5 * dx * std::fabs(rho[0]);
  for (std::size_t i = 1; i < n; ++i) {
    e1[i] = e1[i - 1] + 0.5 * dx * (rho[i - 1] + rho[i]);
    l1 += (i + 1 == n ? 0.5 * dx : dx) * std::fabs(rho[i]);
  }
  double scale = std::max(1.0, l1);
  if (!(std::fabs(e1[n - 1]) <= tol_rel * scale)) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "Gauss integration: net charge %.3e violates neutrality (tol %.1e)",
                  e1[n - 1], tol_rel * scale);
    throw_numerical(buf);
  }
  return e1;
}

void advance_lightcone(FieldState& s, const std::vector<double>& j2_mid, double dt) {
  if (dt != s.dx)
    throw_numerical("light-cone field update requires dt == dx");
  const int n = s.n_nodes();
  if (static_cast<int>(j2_mid.size()) != n)
    throw_numerical("advance_lightcone: current size mismatch");
  std::vector<double> rp_new(n), lm_new(n);
  for (int i = 0; i < n; ++i) {
    double left = (i > 0) ? s.rp[i - 1] : 0.0;
    double jl = (i > 0) ? j2_mid[i - 1] : 0.0;
    rp_new[i] = left - dt * (0.5 * (jl + j2_mid[i]));
    double right = (i + 1 < n) ? s.lm[i + 1] : 0.0;
    double jr = (i + 1 < n) ? j2_mid[i + 1] : 0.0;
    lm_new[i] = right - dt * (0.5 * (j2_mid[i] + jr));
  }
  s.rp.swap(rp_new);
  s.lm.swap(lm_new);
}

void advance_e1_ampere(std::vector<double>& e1, const std::vector<double>& j1_mid,
                       double dt) {
  if (e1.size() != j1_mid.size())
    throw_numerical("advance_e1_ampere: current size mismatch");
  for (std::size_t i = 0; i < e1.size(); ++i) e1[i] -= dt * j1_mid[i];
}

std::vector<double> compute_A(const std::vector<double>& b, double dx) {
  std::vector<double> a(b.size());
  if (b.empty()) return a;
  a[0] = 0.0;
  for (std::size_t i = 1; i < b.size(); ++i)
    a[i] = a[i - 1] + 0.5 * dx * (b[i - 1] + b[i]);
  return a;
}

double field_energy(const FieldState& s) {
  const int n = s.n_nodes();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double w = (i == 0 || i == n - 1) ? 0.5 * s.dx : s.dx;
    total += w * (s.e1[i] * s.e1[i] + s.e2[i] * s.e2[i] + s.b[i] * s.b[i]);
  }
  return total;
}

double wave_residual_A(const std::vector<double>& a_prev,
                       const std::vector<double>& a_cur,
                       const std::vector<double>& a_next,
                       const std::vector<double>& j2_cur,
                       double dt, double dx) {
  const std::size_t n = a_cur.size();
  if (a_prev.size() != n || a_next.size() != n || j2_cur.size() != n)
    throw_numerical("wave_residual_A: array size mismatch");
  double m = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    double dtt = (a_next[i] - 2.0 * a_cur[i] + a_prev[i]) / (dt * dt);
    double dxx = (a_cur[i + 1] - 2.0 * a_cur[i] + a_cur[i - 1]) / (dx * dx);
    m = std::max(m, std::fabs(dtt - dxx - j2_cur[i]));
  }
  return m;
}

void check_field_boundary(const FieldState& s, double threshold) {
  const int n = s.n_nodes();
  for (int i : {0, n - 1}) {
    if (std::fabs(s.e2[i]) > threshold || std::fabs(s.b[i]) > threshold) {
      char buf[128];
      std::snprintf(buf, sizeof buf,
                    "transverse field support reached the grid boundary at node %d", i);
      throw_support(buf);
    }
  }
}

}  // namespace vmsim
