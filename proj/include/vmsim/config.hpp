#pragma once

#include <map>
#include <string>
#include <vector>

#include "vmsim/grid.hpp"
#include "vmsim/profiles.hpp"

namespace vmsim {

enum class RunMode { full, vp1d, cross_validate, orbit_audit };

struct RunConfig {
  // [grid]
  double x_min = -5.0, x_max = 5.0;
  int n_x = 64;
  double v1_min = -2.0, v1_max = 2.0;
  int n_v1 = 32;
  double v2_max = 2.0;  // v2 axis is [-v2_max, v2_max]
  int n_v2 = 32;

  // [profile]
  ProfileSpec profile;

  // [background]
  BumpSpec background{1.0, 0.0, 0.4, 8.6};
  bool neutralize = true;

  // [fields] transverse seeds at t = 0
  BumpSpec e2_seed{0.0, 0.0, 0.5, 8.6};
  BumpSpec b_seed{0.0, 0.0, 0.5, 8.6};

  // [run]
  RunMode mode = RunMode::full;
  double t_final = 1.0;
  bool snapshots = false;
  int snapshot_stride = 16;
  int compare_stride = 8;  // cross-validation report stride
  std::vector<double> epsilons{0.05, 0.1, 0.2, 0.4};
  bool relativistic = false;
  double cfl_factor = 1.0;
  double negative_floor = 1e-12;
  double support_threshold_factor = 1e-12;
  double neutrality_tol = 1e-10;
  int orbit_lattice = 5;
  int orbit_dump_count = 3;
};

// flat "section.key -> value" map parsed from sectioned key = value text;
// `origin` names the source in error messages
std::map<std::string, std::string> parse_key_values(const std::string& text,
                                                    const std::string& origin);

// assignment of the form "section.key=value"
void apply_override(std::map<std::string, std::string>& kv,
                    const std::string& assignment);

// typed extraction; rejects unknown keys and malformed values
RunConfig config_from_map(const std::map<std::string, std::string>& kv);

RunConfig load_config_file(const std::string& path,
                           const std::vector<std::string>& overrides);

// range, support-fit and free-streaming envelope checks; throws config errors
void validate_config(const RunConfig& cfg);

PhaseGrid make_grid(const RunConfig& cfg);
int config_n_steps(const RunConfig& cfg);  // dt = dx, steps = round(t_final/dx)

// canonical sectioned echo; reparsing it reproduces the config exactly
std::string config_echo(const RunConfig& cfg);

const char* run_mode_name(RunMode m);
const char* preset_name(ProfilePreset p);

}  // namespace vmsim
