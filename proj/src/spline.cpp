#include "vmsim/spline.hpp"

#include <cmath>
#include <cstring>

#include "vmsim/errors.hpp"

namespace vmsim {

void SplineWorkspace::build(const double* f, int n_nodes) {
  const int N = n_nodes - 1;  // last node index
  coeff.resize(n_nodes + 2);
  rhs.resize(n_nodes);
  if (cached_nodes != n_nodes) {
    invp.resize(n_nodes);
    double p = 4.0;
    invp[1] = 1.0 / p;
    for (int j = 2; j <= N - 1; ++j) {
      p = 4.0 - invp[j - 1];
      invp[j] = 1.0 / p;
    }
    cached_nodes = n_nodes;
  }

  // natural ends pin c_0 = f_0 and c_N = f_N
  double* c = coeff.data() + 1;
  c[0] = f[0];
  c[N] = f[N];
  rhs[1] = 6.0 * f[1] - c[0];
  for (int j = 2; j <= N - 2; ++j) rhs[j] = 6.0 * f[j];
  rhs[N - 1] = 6.0 * f[N - 1] - c[N];

  for (int j = 2; j <= N - 1; ++j) rhs[j] -= invp[j - 1] * rhs[j - 1];
  c[N - 1] = rhs[N - 1] * invp[N - 1];
  for (int j = N - 2; j >= 1; --j) c[j] = (rhs[j] - c[j + 1]) * invp[j];

  coeff[0] = 2.0 * c[0] - c[1];             // c_{-1}
  coeff[n_nodes + 1] = 2.0 * c[N] - c[N - 1];  // c_{N+1}
}

double SplineWorkspace::eval(int cell, int n_nodes, double t, double s) const {
  if (cell < 0 || cell > n_nodes - 2) return 0.0;
  const double* c = coeff.data() + cell;  // c_{cell-1} at offset 0
  double w0 = s * s * s * (1.0 / 6.0);
  double w3 = t * t * t * (1.0 / 6.0);
  double w1 = (4.0 - 6.0 * t * t + 3.0 * t * t * t) * (1.0 / 6.0);
  double w2 = (4.0 - 6.0 * s * s + 3.0 * s * s * s) * (1.0 / 6.0);
  return (c[0] * w0 + c[1] * w1) + (c[2] * w2 + c[3] * w3);
}

namespace {

struct Feet {
  int k;
  double phi, psi;
};

inline Feet decompose(double shift_cells) {
  if (!(std::fabs(shift_cells) < 1.0e9))
    throw_numerical("advection shift is not finite or absurdly large");
  double kd = std::floor(shift_cells);
  Feet d;
  d.k = static_cast<int>(kd);
  d.phi = shift_cells - kd;
  d.psi = (kd + 1.0) - shift_cells;
  return d;
}

inline void integer_copy(const double* f, int n_nodes, int k, double* out) {
  for (int i = 0; i < n_nodes; ++i) {
    int src = i - k;
    out[i] = (src >= 0 && src < n_nodes) ? f[src] : 0.0;
  }
}

}  // namespace

void advect_line(const double* f, int n_nodes, double shift_cells,
                 double* out, SplineWorkspace& ws) {
  Feet d = decompose(shift_cells);
  if (d.phi == 0.0) {
    integer_copy(f, n_nodes, d.k, out);
    return;
  }
  ws.build(f, n_nodes);
  for (int i = 0; i < n_nodes; ++i)
    out[i] = ws.eval(i - d.k - 1, n_nodes, d.psi, d.phi);
}

void advect_line_symmetric(const double* f, int n_nodes, double shift_cells,
                           double* out, SplineWorkspace& ws) {
  Feet d = decompose(shift_cells);
  if (d.phi == 0.0) {
    integer_copy(f, n_nodes, d.k, out);
    return;
  }
  const int N = n_nodes - 1;
  static thread_local SplineWorkspace ws_rev;
  static thread_local std::vector<double> rev;
  rev.resize(n_nodes);
  for (int i = 0; i < n_nodes; ++i) rev[i] = f[N - i];
  ws.build(f, n_nodes);
  ws_rev.build(rev.data(), n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    double a = ws.eval(i - d.k - 1, n_nodes, d.psi, d.phi);
    double b = ws_rev.eval(N - i + d.k, n_nodes, d.phi, d.psi);
    out[i] = 0.5 * (a + b);
  }
}

void advect_line_feet(const double* f, int n_nodes, const double* shift_cells,
                      double* out, SplineWorkspace& ws) {
  ws.build(f, n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    Feet d = decompose(shift_cells[i]);
    if (d.phi == 0.0) {
      int src = i - d.k;
      out[i] = (src >= 0 && src < n_nodes) ? f[src] : 0.0;
    } else {
      out[i] = ws.eval(i - d.k - 1, n_nodes, d.psi, d.phi);
    }
  }
}

void advect_line_feet_symmetric(const double* f, int n_nodes,
                                const double* shift_cells, double* out,
                                SplineWorkspace& ws) {
  const int N = n_nodes - 1;
  static thread_local SplineWorkspace ws_rev;
  static thread_local std::vector<double> rev;
  rev.resize(n_nodes);
  for (int i = 0; i < n_nodes; ++i) rev[i] = f[N - i];
  ws.build(f, n_nodes);
  ws_rev.build(rev.data(), n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    Feet d = decompose(shift_cells[i]);
    if (d.phi == 0.0) {
      int src = i - d.k;
      out[i] = (src >= 0 && src < n_nodes) ? f[src] : 0.0;
      continue;
    }
    double a = ws.eval(i - d.k - 1, n_nodes, d.psi, d.phi);
    double b = ws_rev.eval(N - i + d.k, n_nodes, d.phi, d.psi);
    out[i] = 0.5 * (a + b);
  }
}

std::vector<double> spline_coefficients(const std::vector<double>& f) {
  if (f.size() < 4) throw_numerical("spline_coefficients: need at least 4 nodes");
  SplineWorkspace ws;
  ws.build(f.data(), static_cast<int>(f.size()));
  return ws.coeff;
}

double spline_eval(const std::vector<double>& coeff, int n_nodes, double u) {
  const int N = n_nodes - 1;
  if (!(u >= 0.0 && u <= static_cast<double>(N))) return 0.0;
  int cell = static_cast<int>(u);
  if (cell > N - 1) cell = N - 1;
  double t = u - cell;
  double s = (cell + 1) - u;
  const double* c = coeff.data() + cell;
  double w0 = s * s * s * (1.0 / 6.0);
  double w3 = t * t * t * (1.0 / 6.0);
  double w1 = (4.0 - 6.0 * t * t + 3.0 * t * t * t) * (1.0 / 6.0);
  double w2 = (4.0 - 6.0 * s * s + 3.0 * s * s * s) * (1.0 / 6.0);
  return (c[0] * w0 + c[1] * w1) + (c[2] * w2 + c[3] * w3);
}

std::vector<double> interpolate_1d(const std::vector<double>& profile,
                                   double shift, double spacing) {
  if (!(spacing > 0.0)) throw_numerical("interpolate_1d: spacing must be positive");
  if (profile.size() < 5) throw_numerical("interpolate_1d: need at least 5 nodes");
  std::vector<double> out(profile.size());
  SplineWorkspace ws;
  advect_line(profile.data(), static_cast<int>(profile.size()),
              shift / spacing, out.data(), ws);
  return out;
}

}  // namespace vmsim
