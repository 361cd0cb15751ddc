#pragma once

#include <array>
#include <vector>

#include "vmsim/fields.hpp"

namespace vmsim {

// Backward (or forward) orbit integration through recorded field history.
//
// The history keeps one snapshot per solver step, equally spaced in time.
// Spatial evaluation uses the same natural cubic spline as the transport
// sweeps; temporal evaluation is linear between neighbouring snapshots.
// With a single snapshot the history is treated as time independent,
// which is convenient for closed-form test fields.

struct CharacteristicState {
  double s;   // time along the orbit
  double x;
  double v1;
  double v2;
};

class FieldHistory {
 public:
  enum class Component { e1, e2, b, a };

  FieldHistory(double x_min, double dx, int n_nodes);

  void push(const FieldState& state);

  int size() const { return static_cast<int>(times_.size()); }
  double t_front() const { return times_.front(); }
  double t_back() const { return times_.back(); }
  double x_min() const { return x_min_; }
  double x_max() const { return x_min_ + dx_ * (n_nodes_ - 1); }

  double eval(Component which, double t, double x) const;

 private:
  double x_min_;
  double dx_;
  int n_nodes_;
  std::vector<double> times_;
  std::vector<std::array<std::vector<double>, 4>> coeffs_;
};

// RK4 integration of dX/ds = V1, dV/ds = K(s, X, V) from s = t_start
// (state taken there) to s = s_target; the trajectory is returned at
// every substep node including both endpoints. `step` is the nominal
// substep; the count is rounded so the landing time is hit exactly.
std::vector<CharacteristicState> integrate_characteristic(
    const FieldHistory& history, double t_start, double x, double v1,
    double v2, double s_target, double step);

// largest deviation of v2 + A(s, X(s)) along the orbit from its value at
// the first trajectory point
double v2A_drift(const FieldHistory& history,
                 const std::vector<CharacteristicState>& trajectory);

// minimum of | |V1(s)| - 1 | over a whole orbit ensemble; each entry of
// `seeds` is {x, v1, v2} at time t_start
double min_distance_to_light_speed(const FieldHistory& history,
                                   const std::vector<std::array<double, 3>>& seeds,
                                   double t_start, double s_target, double step);

}  // namespace vmsim
