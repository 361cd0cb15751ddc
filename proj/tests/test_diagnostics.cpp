#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vmsim/diagnostics.hpp"
#include "vmsim/distribution.hpp"
#include "vmsim/fields.hpp"
#include "vmsim/moments.hpp"

using namespace vmsim;

namespace {

PhaseGrid diag_grid() {
  return PhaseGrid::make(-5.0, 5.0, 64, -2.0, 2.0, 16, -1.6, 1.6, 16);
}

Background zero_background(const PhaseGrid& g) {
  return sample_background(g, {0.0, 0.0, 1.0, 8.6}, false, 0.0);
}

template <class F>
DistributionFunction fill(const PhaseGrid& g, F fn) {
  DistributionFunction f(g);
  for (int i = 0; i <= g.n_x; ++i)
    for (int j = 0; j <= g.n_v1; ++j)
      for (int k = 0; k <= g.n_v2; ++k)
        f.values(i, j, k) = fn(g.x_node[i], g.v1_node[j], g.v2_node[k]);
  return f;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("support readouts match a hand built state") {
  PhaseGrid g = diag_grid();
  DistributionFunction f(g);
  // v1 nodes step 0.25 from -2, v2 nodes step 0.2 from -1.6
  f.values(32, 12, 10) = 1.0;  // v1 = 1.0, v2 = 0.4
  f.values(30, 2, 8) = 0.5;    // v1 = -1.5, v2 = 0
  FieldState fields = FieldState::zero(g.nx_nodes(), g.dx);
  DiagnosticsOptions opt;

  // v1 = 1.0 node makes the light speed gap zero through that point
  DiagnosticsRecord rec = record_diagnostics(f, fields, zero_background(g), opt);
  CHECK(rec.q_support == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(rec.min_v1_gap == 0.0);

  opt.support_threshold = 0.6;  // drop the second marker
  rec = record_diagnostics(f, fields, zero_background(g), opt);
  CHECK(rec.q_support ==
        doctest::Approx(1.0 + std::hypot(1.0, 0.4)).epsilon(1e-14));
  CHECK(rec.min_v1_gap == 0.0);

  f.values(32, 12, 10) = 0.0;
  f.values(30, 2, 8) = 0.0;
  opt.support_threshold = 0.0;
  rec = record_diagnostics(f, fields, zero_background(g), opt);
  CHECK(rec.q_support == 1.0);
  CHECK(rec.min_v1_gap == 0.0);
  for (double s : rec.seps_sup) CHECK(s == 0.0);
}

TEST_CASE("the gradient monitor is exact on linear data") {
  PhaseGrid g = diag_grid();
  const double ax = 0.25, bv1 = 0.5, cv2 = -0.75, d0 = 10.0;
  DistributionFunction f =
      fill(g, [&](double x, double v1, double v2) {
        return ax * x + bv1 * v1 + cv2 * v2 + d0;
      });
  FieldState fields = FieldState::zero(g.nx_nodes(), g.dx);
  DiagnosticsOptions opt;
  opt.epsilons = {0.05, 0.1, 0.2};
  DiagnosticsRecord rec = record_diagnostics(f, fields, zero_background(g), opt);

  double expected = std::fabs(ax) + std::hypot(bv1, cv2);
  REQUIRE(rec.seps_sup.size() == 3);
  for (double s : rec.seps_sup)
    CHECK(s == doctest::Approx(expected).epsilon(1e-12));
  CHECK(rec.min_v1_gap == 0.0);  // the v1 axis holds +/- 1 exactly
  CHECK(rec.q_support == doctest::Approx(1.0 + std::hypot(2.0, 1.6)).epsilon(1e-14));
}

TEST_CASE("the monitor never grows when epsilon grows") {
  PhaseGrid g = diag_grid();
  DistributionFunction f = fill(g, [&](double x, double v1, double v2) {
    double r = x * x / 4.0 + v1 * v1 / 0.3 + v2 * v2 / 0.2;
    return std::exp(-r);
  });
  FieldState fields = FieldState::zero(g.nx_nodes(), g.dx);
  DiagnosticsOptions opt;
  opt.epsilons = {0.01, 0.05, 0.1, 0.2, 0.4, 0.8};
  DiagnosticsRecord rec = record_diagnostics(f, fields, zero_background(g), opt);
  REQUIRE(rec.seps_sup.size() == opt.epsilons.size());
  CHECK(rec.seps_sup.front() > 0.0);
  for (size_t k = 1; k < rec.seps_sup.size(); ++k)
    CHECK(rec.seps_sup[k] <= rec.seps_sup[k - 1]);
}

TEST_CASE("field readouts and parity error") {
  PhaseGrid g = diag_grid();
  ProfileSpec p;
  p.preset = ProfilePreset::even_bump;
  p.amplitude = 0.8;
  p.x = {1.0, 0.0, 0.4, 8.6};
  p.v1 = {1.0, 0.1, 0.16, 8.6};
  p.v2 = {1.0, 0.0, 0.14, 8.6};
  DistributionFunction f = sample_initial_distribution(g, p);
  // wider background than the beam, so rho keeps a resolved dipole shape
  Background bg = sample_background(g, {1.0, 0.0, 0.55, 8.6}, true, total_charge(f));

  Moments mom = compute_moments(f, bg);
  double rho_max = 0.0;
  for (double r : mom.rho) rho_max = std::max(rho_max, std::fabs(r));

  std::vector<double> bconst(g.nx_nodes(), 0.3), zero(g.nx_nodes(), 0.0);
  FieldState fields = FieldState::from_components(
      init_E1_from_gauss(mom.rho, g.dx, 1e-10), zero, bconst, g.dx, 0.0);

  DiagnosticsOptions opt;
  DiagnosticsRecord rec = record_diagnostics(f, fields, bg, opt);
  CHECK(rec.total_charge == total_charge(f));
  CHECK(rec.sym_error == 0.0);
  CHECK(rec.sup_a == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(rec.gauss_residual <= 0.1 * rho_max);
  CHECK(rec.kinetic_energy == kinetic_energy(f));
  CHECK(rec.field_energy == field_energy(fields));

  f.values(20, 8, 9) += 1e-3;  // break the v2 parity at one node pair
  rec = record_diagnostics(f, fields, bg, opt);
  CHECK(rec.sym_error == doctest::Approx(1e-3).epsilon(1e-9));
}

TEST_CASE("energy drift is measured against the first record") {
  std::vector<DiagnosticsRecord> recs(3);
  recs[0].kinetic_energy = 1.0;
  recs[0].field_energy = 0.5;
  recs[1].kinetic_energy = 1.05;
  recs[1].field_energy = 0.5;
  recs[2].kinetic_energy = 0.98;
  recs[2].field_energy = 0.5;
  CHECK(energy_drift(recs) == doctest::Approx(0.05 / 1.5).epsilon(1e-14));
  recs.resize(1);
  CHECK(energy_drift(recs) == 0.0);
  CHECK(energy_drift({}) == 0.0);
}

TEST_CASE("csv layout is stable and deterministic") {
  DiagnosticsOptions opt;
  opt.epsilons = {0.05, 0.1};
  CHECK(diagnostics_csv_header(opt) ==
        "time,kinetic_energy,field_energy,total_charge,Q_support,sup_A,"
        "gauss_residual,sym_error,min_v1_gap,seps_sup:0.05,seps_sup:0.1");

  DiagnosticsRecord rec;
  rec.time = 1;
  rec.kinetic_energy = 2;
  rec.field_energy = 3;
  rec.total_charge = 4;
  rec.q_support = 5;
  rec.sup_a = 6;
  rec.gauss_residual = 7;
  rec.sym_error = 8;
  rec.min_v1_gap = 9;
  rec.seps_sup = {10, 11};
  CHECK(diagnostics_csv_row(rec) == "1,2,3,4,5,6,7,8,9,10,11");

  rec.time = 0.1;  // full precision round trip keeps all 17 digits
  CHECK(diagnostics_csv_row(rec).substr(0, 19) == "0.10000000000000001");

  std::vector<DiagnosticsRecord> recs = {rec, rec};
  const std::string path = "diagnostics_roundtrip_tmp.csv";
  write_diagnostics_csv(path, opt, recs);
  std::string first = slurp(path);
  write_diagnostics_csv(path, opt, recs);
  CHECK(first == slurp(path));
  CHECK(first == diagnostics_csv_header(opt) + "\n" + diagnostics_csv_row(rec) +
                     "\n" + diagnostics_csv_row(rec) + "\n");
  std::remove(path.c_str());
}
