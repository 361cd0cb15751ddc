#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "vmsim/errors.hpp"
#include "vmsim/grid.hpp"
#include "vmsim/spline.hpp"

using namespace vmsim;

namespace {

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> gaussian_line(int n_nodes, double h, double x0,
                                  double sigma) {
  std::vector<double> f(n_nodes);
  double lo = -0.5 * h * (n_nodes - 1);
  for (int i = 0; i < n_nodes; ++i) {
    double x = lo + i * h;
    double u = (x - x0) / sigma;
    f[i] = std::exp(-0.5 * u * u);
  }
  return f;
}

}  // namespace

TEST_CASE("grid nodes and v2 pairing") {
  PhaseGrid g = PhaseGrid::make(-2.0, 2.0, 8, -1.5, 1.0, 10, -1.2, 1.2, 12);
  CHECK(g.nx_nodes() == 9);
  CHECK(g.x_node.front() == -2.0);
  CHECK(g.x_node.back() == 2.0);
  CHECK(g.dx == doctest::Approx(0.5).epsilon(1e-15));

  for (int k = 0; 2 * k < g.n_v2; ++k) {
    double lo = g.v2_node[k];
    double hi = g.v2_node[g.mirror_v2(k)];
    CHECK(std::memcmp(&lo, &hi, sizeof lo) != 0);
    double neg = -lo;
    CHECK(std::memcmp(&neg, &hi, sizeof neg) == 0);
  }
  CHECK(g.v2_node[6] == 0.0);
  CHECK(!std::signbit(g.v2_node[6]));

  double len = 0.0;
  for (int i = 0; i <= g.n_x; ++i)
    len += PhaseGrid::trapezoid_weight(i, g.n_x, g.dx);
  CHECK(len == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("refined grid keeps coarse nodes bitwise") {
  PhaseGrid g = PhaseGrid::make(-3.0, 5.0, 12, -1.0, 1.0, 8, -0.7, 0.7, 6);
  PhaseGrid r = g.refined();
  CHECK(r.n_x == 24);
  CHECK(r.n_v1 == 16);
  CHECK(r.n_v2 == 12);
  for (int i = 0; i <= g.n_x; ++i) CHECK(r.x_node[2 * i] == g.x_node[i]);
  for (int j = 0; j <= g.n_v1; ++j) CHECK(r.v1_node[2 * j] == g.v1_node[j]);
  for (int k = 0; k <= g.n_v2; ++k) CHECK(r.v2_node[2 * k] == g.v2_node[k]);
}

TEST_CASE("grid construction rejects bad boxes") {
  CHECK_THROWS_AS(PhaseGrid::make(0, 1, 3, -1, 1, 8, -1, 1, 8), SimError);
  CHECK_THROWS_AS(PhaseGrid::make(1, 0, 8, -1, 1, 8, -1, 1, 8), SimError);
  CHECK_THROWS_AS(PhaseGrid::make(0, 1, 8, -1, 1, 8, -1.0, 1.5, 8), SimError);
  try {
    PhaseGrid::make(0, 1, 8, -1, 1, 8, -1.0, 1.5, 8);
  } catch (const SimError& e) {
    CHECK(e.kind() == ErrorKind::config);
  }
}

TEST_CASE("integer shifts copy bitwise with zero fill") {
  std::vector<double> f = gaussian_line(33, 0.25, 0.3, 0.8);
  std::vector<double> out(33);
  SplineWorkspace ws;
  advect_line(f.data(), 33, 3.0, out.data(), ws);
  for (int i = 0; i < 33; ++i) {
    if (i >= 3)
      CHECK(out[i] == f[i - 3]);
    else
      CHECK(out[i] == 0.0);
  }
}

TEST_CASE("linear data advects exactly inside the stencil") {
  const int n = 41;
  std::vector<double> f(n), out(n);
  for (int i = 0; i < n; ++i) f[i] = 0.7 * i - 3.0;
  SplineWorkspace ws;
  double shift = 0.37;
  advect_line(f.data(), n, shift, out.data(), ws);
  for (int i = 1; i < n; ++i) {
    double foot = i - shift;
    if (foot < 0.0 || foot > n - 1) continue;
    CHECK(out[i] == doctest::Approx(0.7 * foot - 3.0).epsilon(1e-13));
  }
}

TEST_CASE("smooth advection converges at fourth order") {
  // The spline error constant depends on the fractional grid offset of the
  // shift, so hold that offset fixed across levels and scale the physical
  // shift with h. What remains is the pure h^4 factor.
  double theta = 0.37;
  double err[2];
  for (int level = 0; level < 2; ++level) {
    double h = 0.0625 / (1 << level);
    double a = theta * h;
    int n = static_cast<int>(std::lround(16.0 / h)) + 1;
    std::vector<double> f = gaussian_line(n, h, 0.0, 1.0);
    std::vector<double> out(n);
    SplineWorkspace ws;
    advect_line(f.data(), n, a / h, out.data(), ws);
    double worst = 0.0;
    double lo = -8.0;
    for (int i = 0; i < n; ++i) {
      double x = lo + i * h;
      double u = x - a;
      worst = std::max(worst, std::fabs(out[i] - std::exp(-0.5 * u * u)));
    }
    err[level] = worst;
  }
  double ratio = err[0] / err[1];
  CHECK(ratio > 8.0);
  CHECK(ratio < 32.0);
}

TEST_CASE("advection preserves the lattice sum of compact data") {
  const int n = 101;
  std::vector<double> f = gaussian_line(n, 0.2, 0.5, 1.1);
  std::vector<double> out(n);
  SplineWorkspace ws;
  advect_line(f.data(), n, -0.83, out.data(), ws);
  double s0 = 0.0, s1 = 0.0;
  for (int i = 0; i < n; ++i) {
    s0 += f[i];
    s1 += out[i];
  }
  CHECK(s1 == doctest::Approx(s0).epsilon(1e-13));
}

TEST_CASE("reversal averaged advection commutes with mirroring bitwise") {
  const int n = 40;
  std::vector<double> f(n), rev(n), out(n), out_rev(n), mirrored(n);
  for (int i = 0; i < n; ++i) {
    double x = 0.23 * i - 4.0;
    f[i] = std::exp(-0.11 * x * x) * (1.0 + 0.4 * std::sin(1.7 * x));
  }
  for (int i = 0; i < n; ++i) rev[i] = f[n - 1 - i];

  SplineWorkspace ws;
  for (double shift : {1.37, -0.62, 0.0, 3.0, -2.25}) {
    advect_line_symmetric(f.data(), n, shift, out.data(), ws);
    advect_line_symmetric(rev.data(), n, -shift, out_rev.data(), ws);
    for (int i = 0; i < n; ++i) mirrored[i] = out_rev[n - 1 - i];
    CHECK(same_bits(out, mirrored));
  }
}

TEST_CASE("per node feet variant matches the uniform variant") {
  const int n = 37;
  std::vector<double> f = gaussian_line(n, 0.3, -0.4, 1.0);
  std::vector<double> a(n), b(n), feet(n, 0.777);
  SplineWorkspace ws;
  advect_line(f.data(), n, 0.777, a.data(), ws);
  advect_line_feet(f.data(), n, feet.data(), b.data(), ws);
  CHECK(same_bits(a, b));

  advect_line_symmetric(f.data(), n, 0.777, a.data(), ws);
  advect_line_feet_symmetric(f.data(), n, feet.data(), b.data(), ws);
  CHECK(same_bits(a, b));
}

TEST_CASE("absurd shifts are rejected") {
  std::vector<double> f(16, 1.0), out(16);
  SplineWorkspace ws;
  CHECK_THROWS_AS(advect_line(f.data(), 16, 1e12, out.data(), ws), SimError);
  double nan = std::nan("");
  CHECK_THROWS_AS(advect_line(f.data(), 16, nan, out.data(), ws), SimError);
}

TEST_CASE("standalone coefficients reproduce node values") {
  std::vector<double> f = gaussian_line(21, 0.4, 0.1, 1.3);
  std::vector<double> c = spline_coefficients(f);
  for (int j = 0; j < 21; ++j)
    CHECK(spline_eval(c, 21, double(j)) == doctest::Approx(f[j]).epsilon(1e-13));
  CHECK(spline_eval(c, 21, -0.5) == 0.0);
  CHECK(spline_eval(c, 21, 20.5) == 0.0);
  CHECK(spline_eval(c, 21, 20.0) == doctest::Approx(f[20]).epsilon(1e-13));
}

TEST_CASE("interpolate_1d shifts a sampled profile") {
  const int n = 41;
  double h = 0.25;
  std::vector<double> f = gaussian_line(n, h, 0.0, 1.0);
  std::vector<double> out = interpolate_1d(f, 2.0 * h, h);
  for (int i = 2; i < n; ++i) CHECK(out[i] == f[i - 2]);
  CHECK_THROWS_AS(interpolate_1d(f, 0.5, 0.0), SimError);
}
