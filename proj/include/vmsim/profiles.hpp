#pragma once

#include <vector>

namespace vmsim {

/* Compactly supported bump: a Gaussian truncated at `cutoff` sigmas and
 * shifted down by its cutoff value, so the profile reaches zero exactly at
 * the support edge. With the default cutoff the shift is ~1e-16 of the peak
 * and the sampled profile is smooth at machine precision, which keeps
 * semi-Lagrangian undershoot far below the negative-value clamp floor. */
struct BumpSpec {
  double amplitude = 0.0;
  double center = 0.0;
  double sigma = 1.0;
  double cutoff = 8.6;  // in sigmas
};

double bump_eval(const BumpSpec& s, double r);
double bump_integral(const BumpSpec& s);  // closed form over the support
inline double bump_support_radius(const BumpSpec& s) { return s.sigma * s.cutoff; }

std::vector<double> sample_bump(const BumpSpec& s, const std::vector<double>& nodes);

enum class ProfilePreset { zero, even_bump, two_stream, asymmetric_bump };

// Product-form initial data. x/v1/v2 carry shape bumps with unit amplitude;
// the overall scale is `amplitude`. two_stream places v1 bumps at
// +/- beam_speed; asymmetric_bump shifts the v2 bump off center.
struct ProfileSpec {
  ProfilePreset preset = ProfilePreset::zero;
  double amplitude = 1.0;
  BumpSpec x{1.0, 0.0, 1.0, 8.6};
  double x_mod_amp = 0.0;  // (1 + a cos(k (x - x.center))) modulation, |a| <= 1
  double x_mod_k = 0.0;
  BumpSpec v1{1.0, 0.0, 0.3, 8.6};
  double beam_speed = 1.0;
  BumpSpec v2{1.0, 0.0, 0.3, 8.6};
};

double profile_eval(const ProfileSpec& p, double x, double v1, double v2);
bool profile_even_in_v2(const ProfileSpec& p);
// product of the closed-form factor integrals; requires x_mod_amp == 0
double profile_closed_form_charge(const ProfileSpec& p);

// support bounds [lo, hi] per axis; zero preset gives empty (lo > hi)
struct SupportBox {
  double x_lo = 0, x_hi = 0, v1_lo = 0, v1_hi = 0, v2_lo = 0, v2_hi = 0;
  bool empty = true;
};
SupportBox profile_support(const ProfileSpec& p);

}  // namespace vmsim
