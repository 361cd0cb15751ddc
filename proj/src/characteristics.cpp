#include "vmsim/characteristics.hpp"

#include <cmath>
#include <cstdio>

#include "vmsim/errors.hpp"
#include "vmsim/spline.hpp"

namespace vmsim {

FieldHistory::FieldHistory(double x_min, double dx, int n_nodes)
    : x_min_(x_min), dx_(dx), n_nodes_(n_nodes) {
  if (!(dx > 0.0) || n_nodes < 5)
    throw_config("field history needs a positive spacing and at least 5 nodes");
}

void FieldHistory::push(const FieldState& state) {
  if (static_cast<int>(state.e1.size()) != n_nodes_)
    throw_config("field history push: node count mismatch");
  if (!times_.empty() && !(state.time > times_.back()))
    throw_config("field history push: snapshot times must increase");
  times_.push_back(state.time);
  coeffs_.push_back({spline_coefficients(state.e1), spline_coefficients(state.e2),
                     spline_coefficients(state.b), spline_coefficients(state.a)});
}

double FieldHistory::eval(Component which, double t, double x) const {
  if (times_.empty()) throw_numerical("field history is empty");
  const int c = static_cast<int>(which);

  double u = (x - x_min_) / dx_;
  const double slack = 1e-9;
  if (!(u >= -slack && u <= (n_nodes_ - 1) + slack)) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "characteristic escaped the field domain: x = %.17g at s = %.17g",
                  x, t);
    throw_numerical(msg);
  }
  if (u < 0.0) u = 0.0;
  if (u > n_nodes_ - 1) u = n_nodes_ - 1;

  if (times_.size() == 1) return spline_eval(coeffs_[0][c], n_nodes_, u);

  double dth = times_[1] - times_[0];
  double w = (t - times_[0]) / dth;
  if (!(w >= -slack && w <= (times_.size() - 1) + slack)) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "field history evaluated outside recorded times: s = %.17g", t);
    throw_numerical(msg);
  }
  int it = static_cast<int>(std::floor(w));
  if (it < 0) it = 0;
  if (it > static_cast<int>(times_.size()) - 2)
    it = static_cast<int>(times_.size()) - 2;
  double th = w - it;
  if (th < 0.0) th = 0.0;
  if (th > 1.0) th = 1.0;

  double lo = spline_eval(coeffs_[it][c], n_nodes_, u);
  double hi = spline_eval(coeffs_[it + 1][c], n_nodes_, u);
  return (1.0 - th) * lo + th * hi;
}

namespace {

struct Rhs {
  double dx, dv1, dv2;
};

inline Rhs orbit_rhs(const FieldHistory& h, double s, double x, double v1,
                     double v2) {
  double e1 = h.eval(FieldHistory::Component::e1, s, x);
  double e2 = h.eval(FieldHistory::Component::e2, s, x);
  double b = h.eval(FieldHistory::Component::b, s, x);
  return {v1, e1 + v2 * b, e2 - v1 * b};
}

}  // namespace

std::vector<CharacteristicState> integrate_characteristic(
    const FieldHistory& history, double t_start, double x, double v1,
    double v2, double s_target, double step) {
  if (!(step > 0.0)) throw_config("orbit substep must be positive");
  double span = s_target - t_start;
  int n = std::abs(span) > 0.0
              ? static_cast<int>(std::llround(std::fabs(span) / step))
              : 0;
  if (n < 1 && std::fabs(span) > 0.0) n = 1;
  double hs = n > 0 ? span / n : 0.0;

  std::vector<CharacteristicState> traj;
  traj.reserve(n + 1);
  traj.push_back({t_start, x, v1, v2});

  double s = t_start;
  for (int m = 0; m < n; ++m) {
    Rhs k1 = orbit_rhs(history, s, x, v1, v2);
    Rhs k2 = orbit_rhs(history, s + 0.5 * hs, x + 0.5 * hs * k1.dx,
                       v1 + 0.5 * hs * k1.dv1, v2 + 0.5 * hs * k1.dv2);
    Rhs k3 = orbit_rhs(history, s + 0.5 * hs, x + 0.5 * hs * k2.dx,
                       v1 + 0.5 * hs * k2.dv1, v2 + 0.5 * hs * k2.dv2);
    Rhs k4 = orbit_rhs(history, s + hs, x + hs * k3.dx, v1 + hs * k3.dv1,
                       v2 + hs * k3.dv2);
    x += hs / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    v1 += hs / 6.0 * (k1.dv1 + 2.0 * k2.dv1 + 2.0 * k3.dv1 + k4.dv1);
    v2 += hs / 6.0 * (k1.dv2 + 2.0 * k2.dv2 + 2.0 * k3.dv2 + k4.dv2);
    s = (m + 1 == n) ? s_target : t_start + (m + 1) * hs;
    if (!(std::isfinite(x) && std::isfinite(v1) && std::isfinite(v2)))
      throw_numerical("orbit integration produced a non-finite state");
    traj.push_back({s, x, v1, v2});
  }
  return traj;
}

double v2A_drift(const FieldHistory& history,
                 const std::vector<CharacteristicState>& trajectory) {
  if (trajectory.empty()) return 0.0;
  const CharacteristicState& ref = trajectory.front();
  double inv0 = ref.v2 + history.eval(FieldHistory::Component::a, ref.s, ref.x);
  double worst = 0.0;
  for (const CharacteristicState& st : trajectory) {
    double inv = st.v2 + history.eval(FieldHistory::Component::a, st.s, st.x);
    double d = std::fabs(inv - inv0);
    if (d > worst) worst = d;
  }
  return worst;
}

double min_distance_to_light_speed(const FieldHistory& history,
                                   const std::vector<std::array<double, 3>>& seeds,
                                   double t_start, double s_target, double step) {
  double best = 1.0;  // empty ensemble reports the gap of a particle at rest
  bool any = false;
  for (const auto& seed : seeds) {
    auto traj = integrate_characteristic(history, t_start, seed[0], seed[1],
                                         seed[2], s_target, step);
    for (const CharacteristicState& st : traj) {
      double gap = std::fabs(std::fabs(st.v1) - 1.0);
      if (!any || gap < best) {
        best = gap;
        any = true;
      }
    }
  }
  return best;
}

}  // namespace vmsim
