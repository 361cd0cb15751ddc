#include "vmsim/profiles.hpp"

#include <cmath>

#include "vmsim/errors.hpp"

namespace vmsim {

double bump_eval(const BumpSpec& s, double r) {
  if (s.amplitude == 0.0) return 0.0;
  double u = (r - s.center) / s.sigma;
  if (!(std::fabs(u) < s.cutoff)) return 0.0;
  double offset = std::exp(-0.5 * s.cutoff * s.cutoff);
  return s.amplitude * (std::exp(-0.5 * (u * u)) - offset);
}

double bump_integral(const BumpSpec& s) {
  if (s.amplitude == 0.0) return 0.0;
  double offset = std::exp(-0.5 * s.cutoff * s.cutoff);
  double core = std::sqrt(2.0 * M_PI) * std::erf(s.cutoff / std::sqrt(2.0));
  return s.amplitude * s.sigma * (core - 2.0 * s.cutoff * offset);
}

std::vector<double> sample_bump(const BumpSpec& s, const std::vector<double>& nodes) {
  std::vector<double> out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) out[i] = bump_eval(s, nodes[i]);
  return out;
}

namespace {

double v1_factor(const ProfileSpec& p, double v1) {
  if (p.preset == ProfilePreset::two_stream) {
    BumpSpec right = p.v1;
    BumpSpec left = p.v1;
    right.center = p.beam_speed;
    left.center = -p.beam_speed;
    return bump_eval(right, v1) + bump_eval(left, v1);
  }
  return bump_eval(p.v1, v1);
}

double x_factor(const ProfileSpec& p, double x) {
  double g = bump_eval(p.x, x);
  if (p.x_mod_amp != 0.0)
    g *= 1.0 + p.x_mod_amp * std::cos(p.x_mod_k * (x - p.x.center));
  return g;
}

}  // namespace

double profile_eval(const ProfileSpec& p, double x, double v1, double v2) {
  if (p.preset == ProfilePreset::zero) return 0.0;
  return p.amplitude * x_factor(p, x) * v1_factor(p, v1) * bump_eval(p.v2, v2);
}

bool profile_even_in_v2(const ProfileSpec& p) {
  if (p.preset == ProfilePreset::zero) return true;
  return p.v2.center == 0.0;
}

double profile_closed_form_charge(const ProfileSpec& p) {
  if (p.preset == ProfilePreset::zero) return 0.0;
  if (p.x_mod_amp != 0.0)
    throw_config("closed-form charge is only available without x modulation");
  double fx = bump_integral(p.x);
  double fv1 = bump_integral(p.v1);
  if (p.preset == ProfilePreset::two_stream) fv1 *= 2.0;
  double fv2 = bump_integral(p.v2);
  return p.amplitude * fx * fv1 * fv2;
}

SupportBox profile_support(const ProfileSpec& p) {
  SupportBox s;
  if (p.preset == ProfilePreset::zero || p.amplitude == 0.0) return s;
  s.empty = false;
  double rx = bump_support_radius(p.x);
  s.x_lo = p.x.center - rx;
  s.x_hi = p.x.center + rx;
  double rv1 = bump_support_radius(p.v1);
  if (p.preset == ProfilePreset::two_stream) {
    s.v1_lo = -std::fabs(p.beam_speed) - rv1;
    s.v1_hi = std::fabs(p.beam_speed) + rv1;
  } else {
    s.v1_lo = p.v1.center - rv1;
    s.v1_hi = p.v1.center + rv1;
  }
  double rv2 = bump_support_radius(p.v2);
  s.v2_lo = p.v2.center - rv2;
  s.v2_hi = p.v2.center + rv2;
  return s;
}

}  // namespace vmsim
