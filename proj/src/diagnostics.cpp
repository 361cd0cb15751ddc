#include "vmsim/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "vmsim/errors.hpp"

namespace vmsim {

namespace {

// second order one-sided differences at the ends, centered inside
inline double diff_line(double fm2, double fm1, double f0, double fp1,
                        double fp2, int idx, int last, double h) {
  if (idx == 0) return (-3.0 * f0 + 4.0 * fp1 - fp2) / (2.0 * h);
  if (idx == last) return (3.0 * f0 - 4.0 * fm1 + fm2) / (2.0 * h);
  (void)fm2;
  (void)fp2;
  return (fp1 - fm1) / (2.0 * h);
}

}  // namespace

DiagnosticsRecord record_diagnostics(const DistributionFunction& f,
                                     const FieldState& fields,
                                     const Background& bg,
                                     const DiagnosticsOptions& opt) {
  const PhaseGrid& g = f.grid;
  const Array3& v = f.values;
  DiagnosticsRecord rec;
  rec.time = f.time;
  rec.kinetic_energy = kinetic_energy(f);
  rec.total_charge = total_charge(f);
  rec.sym_error = sym_error_v2(f);
  rec.seps_sup.assign(opt.epsilons.size(), 0.0);

  for (int i = 0; i < fields.n_nodes(); ++i) {
    double av = std::fabs(fields.a[i]);
    if (av > rec.sup_a) rec.sup_a = av;
  }

  Moments mom = compute_moments(f, bg, false, 1);

  // The velocity kicks use the longitudinal field rebuilt from rho each step,
  // so the energy ledger books that field; fields.e1 holds the independently
  // advanced Ampere copy, which gauss_residual below watches.
  std::vector<double> e1g = init_E1_from_gauss(mom.rho, g.dx, 1.0);
  double fe = 0.0;
  for (int i = 0; i < fields.n_nodes(); ++i) {
    double w = (i == 0 || i == fields.n_nodes() - 1) ? 0.5 * g.dx : g.dx;
    fe += w * (e1g[i] * e1g[i] + fields.e2[i] * fields.e2[i] +
               fields.b[i] * fields.b[i]);
  }
  rec.field_energy = fe;

  // Gauss residual against the instantaneous charge density
  double worst_gauss = 0.0;
  for (int i = 1; i < g.n_x; ++i) {
    double dive = (fields.e1[i + 1] - fields.e1[i - 1]) / (2.0 * g.dx);
    double r = std::fabs(dive - mom.rho[i]);
    if (r > worst_gauss) worst_gauss = r;
  }
  rec.gauss_residual = worst_gauss;

  const int nx = g.n_x, nv1 = g.n_v1, nv2 = g.n_v2;
  double sup_speed = -1.0;
  double min_gap = -1.0;
  for (int i = 0; i <= nx; ++i) {
    for (int j = 0; j <= nv1; ++j) {
      const double v1 = g.v1_node[j];
      const double gap = std::fabs(std::fabs(v1) - 1.0);
      for (int k = 0; k <= nv2; ++k) {
        double fv = v(i, j, k);
        if (fv > opt.support_threshold) {
          double speed = std::hypot(v1, g.v2_node[k]);
          if (speed > sup_speed) sup_speed = speed;
          if (min_gap < 0.0 || gap < min_gap) min_gap = gap;
        }

        double fx = diff_line(i >= 2 ? v(i - 2, j, k) : 0.0,
                              i >= 1 ? v(i - 1, j, k) : 0.0, fv,
                              i + 1 <= nx ? v(i + 1, j, k) : 0.0,
                              i + 2 <= nx ? v(i + 2, j, k) : 0.0, i, nx, g.dx);
        double fv1 = diff_line(j >= 2 ? v(i, j - 2, k) : 0.0,
                               j >= 1 ? v(i, j - 1, k) : 0.0, fv,
                               j + 1 <= nv1 ? v(i, j + 1, k) : 0.0,
                               j + 2 <= nv1 ? v(i, j + 2, k) : 0.0, j, nv1,
                               g.dv1);
        double fv2 = diff_line(k >= 2 ? v(i, j, k - 2) : 0.0,
                               k >= 1 ? v(i, j, k - 1) : 0.0, fv,
                               k + 1 <= nv2 ? v(i, j, k + 1) : 0.0,
                               k + 2 <= nv2 ? v(i, j, k + 2) : 0.0, k, nv2,
                               g.dv2);
        double gr = std::fabs(fx) + std::sqrt(fv1 * fv1 + fv2 * fv2);
        for (std::size_t e = 0; e < opt.epsilons.size(); ++e) {
          if (gap > opt.epsilons[e] && gr > rec.seps_sup[e])
            rec.seps_sup[e] = gr;
        }
      }
    }
  }
  rec.q_support = sup_speed < 0.0 ? 1.0 : 1.0 + sup_speed;
  rec.min_v1_gap = min_gap < 0.0 ? 0.0 : min_gap;
  return rec;
}

double energy_drift(const std::vector<DiagnosticsRecord>& records) {
  if (records.empty()) return 0.0;
  double e0 = records.front().kinetic_energy + records.front().field_energy;
  double scale = std::fabs(e0) > 0.0 ? std::fabs(e0) : 1.0;
  double worst = 0.0;
  for (const DiagnosticsRecord& r : records) {
    double d = std::fabs(r.kinetic_energy + r.field_energy - e0) / scale;
    if (d > worst) worst = d;
  }
  return worst;
}

std::string diagnostics_csv_header(const DiagnosticsOptions& opt) {
  std::string h =
      "time,kinetic_energy,field_energy,total_charge,Q_support,sup_A,"
      "gauss_residual,sym_error,min_v1_gap";
  char buf[64];
  for (double e : opt.epsilons) {
    std::snprintf(buf, sizeof buf, ",seps_sup:%g", e);
    h += buf;
  }
  return h;
}

std::string diagnostics_csv_row(const DiagnosticsRecord& rec) {
  char buf[64];
  std::string row;
  const double cols[] = {rec.time,       rec.kinetic_energy, rec.field_energy,
                         rec.total_charge, rec.q_support,    rec.sup_a,
                         rec.gauss_residual, rec.sym_error,  rec.min_v1_gap};
  for (std::size_t c = 0; c < sizeof cols / sizeof cols[0]; ++c) {
    std::snprintf(buf, sizeof buf, c ? ",%.17g" : "%.17g", cols[c]);
    row += buf;
  }
  for (double s : rec.seps_sup) {
    std::snprintf(buf, sizeof buf, ",%.17g", s);
    row += buf;
  }
  return row;
}

void write_diagnostics_csv(const std::string& path,
                           const DiagnosticsOptions& opt,
                           const std::vector<DiagnosticsRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_config("cannot open diagnostics output file: " + path);
  out << diagnostics_csv_header(opt) << '\n';
  for (const DiagnosticsRecord& r : records)
    out << diagnostics_csv_row(r) << '\n';
  if (!out) throw_config("failed writing diagnostics output file: " + path);
}

}  // namespace vmsim
