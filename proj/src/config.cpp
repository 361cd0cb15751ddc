#include "vmsim/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "vmsim/errors.hpp"

namespace vmsim {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void fail_at(const std::string& origin, int line,
                          const std::string& what) {
  char buf[64];
  std::snprintf(buf, sizeof buf, ":%d: ", line);
  throw_config(origin + buf + what);
}

double parse_double(const std::string& key, const std::string& value) {
  const char* s = value.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !std::isfinite(v))
    throw_config("config key " + key + ": not a finite number: '" + value + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const char* s = value.c_str();
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < -1000000000L || v > 1000000000L)
    throw_config("config key " + key + ": not an integer: '" + value + "'");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw_config("config key " + key + ": expected true/false: '" + value + "'");
}

struct Extractor {
  const std::map<std::string, std::string>& kv;
  std::set<std::string> used;

  const std::string* find(const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) return nullptr;
    used.insert(key);
    return &it->second;
  }
  double num(const std::string& key, double def) {
    const std::string* v = find(key);
    return v ? parse_double(key, *v) : def;
  }
  int integer(const std::string& key, int def) {
    const std::string* v = find(key);
    return v ? parse_int(key, *v) : def;
  }
  bool flag(const std::string& key, bool def) {
    const std::string* v = find(key);
    return v ? parse_bool(key, *v) : def;
  }
  std::string text(const std::string& key, const std::string& def) {
    const std::string* v = find(key);
    return v ? *v : def;
  }
};

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& value) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(value);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw_config("config key " + key + ": empty list entry");
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) throw_config("config key " + key + ": empty list");
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text,
                                                    const std::string& origin) {
  std::map<std::string, std::string> kv;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']' || s.size() < 3)
        fail_at(origin, line, "malformed section header: " + s);
      section = trim(s.substr(1, s.size() - 2));
      if (section.empty()) fail_at(origin, line, "empty section name");
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      fail_at(origin, line, "expected key = value: " + s);
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail_at(origin, line, "empty key");
    if (section.empty())
      fail_at(origin, line, "key outside any [section]: " + key);
    std::string full = section + "." + key;
    if (kv.count(full)) fail_at(origin, line, "duplicate key: " + full);
    kv[full] = value;
  }
  return kv;
}

void apply_override(std::map<std::string, std::string>& kv,
                    const std::string& assignment) {
  std::size_t eq = assignment.find('=');
  if (eq == std::string::npos)
    throw_config("override must look like section.key=value: " + assignment);
  std::string key = trim(assignment.substr(0, eq));
  std::string value = trim(assignment.substr(eq + 1));
  if (key.find('.') == std::string::npos || key.front() == '.' ||
      key.back() == '.')
    throw_config("override key must be section.key: " + assignment);
  kv[key] = value;
}

const char* run_mode_name(RunMode m) {
  switch (m) {
    case RunMode::full: return "full";
    case RunMode::vp1d: return "vp1d";
    case RunMode::cross_validate: return "cross-validate";
    case RunMode::orbit_audit: return "orbit-audit";
  }
  return "full";
}

const char* preset_name(ProfilePreset p) {
  switch (p) {
    case ProfilePreset::zero: return "zero";
    case ProfilePreset::even_bump: return "even-bump";
    case ProfilePreset::two_stream: return "two-stream";
    case ProfilePreset::asymmetric_bump: return "asymmetric-bump";
  }
  return "zero";
}

RunConfig config_from_map(const std::map<std::string, std::string>& kv) {
  RunConfig cfg;
  Extractor ex{kv, {}};

  cfg.x_min = ex.num("grid.x_min", cfg.x_min);
  cfg.x_max = ex.num("grid.x_max", cfg.x_max);
  cfg.n_x = ex.integer("grid.n_x", cfg.n_x);
  cfg.v1_min = ex.num("grid.v1_min", cfg.v1_min);
  cfg.v1_max = ex.num("grid.v1_max", cfg.v1_max);
  cfg.n_v1 = ex.integer("grid.n_v1", cfg.n_v1);
  cfg.v2_max = ex.num("grid.v2_max", cfg.v2_max);
  cfg.n_v2 = ex.integer("grid.n_v2", cfg.n_v2);

  ProfileSpec& p = cfg.profile;
  p.preset = ProfilePreset::even_bump;
  std::string preset = ex.text("profile.preset", "even-bump");
  if (preset == "zero")
    p.preset = ProfilePreset::zero;
  else if (preset == "even-bump")
    p.preset = ProfilePreset::even_bump;
  else if (preset == "two-stream")
    p.preset = ProfilePreset::two_stream;
  else if (preset == "asymmetric-bump")
    p.preset = ProfilePreset::asymmetric_bump;
  else
    throw_config("unknown profile.preset: " + preset);
  p.amplitude = ex.num("profile.amplitude", 1.0);
  p.x.center = ex.num("profile.x_center", 0.0);
  p.x.sigma = ex.num("profile.x_sigma", 0.4);
  p.x.cutoff = ex.num("profile.x_cutoff", 8.6);
  p.x_mod_amp = ex.num("profile.x_mod_amp", 0.0);
  p.x_mod_k = ex.num("profile.x_mod_k", 0.0);
  p.v1.center = ex.num("profile.v1_center", 0.0);
  p.v1.sigma = ex.num("profile.v1_sigma", 0.15);
  p.v1.cutoff = ex.num("profile.v1_cutoff", 8.6);
  p.beam_speed = ex.num("profile.beam_speed", 0.5);
  p.v2.center = ex.num("profile.v2_center", 0.0);
  p.v2.sigma = ex.num("profile.v2_sigma", 0.15);
  p.v2.cutoff = ex.num("profile.v2_cutoff", 8.6);
  p.x.amplitude = p.v1.amplitude = p.v2.amplitude = 1.0;

  cfg.background.amplitude = ex.num("background.amplitude", 1.0);
  cfg.background.center = ex.num("background.center", 0.0);
  cfg.background.sigma = ex.num("background.sigma", 0.4);
  cfg.background.cutoff = ex.num("background.cutoff", 8.6);
  cfg.neutralize = ex.flag("background.neutralize", true);

  cfg.e2_seed.amplitude = ex.num("fields.e2_amplitude", 0.0);
  cfg.e2_seed.center = ex.num("fields.e2_center", 0.0);
  cfg.e2_seed.sigma = ex.num("fields.e2_sigma", 0.5);
  cfg.e2_seed.cutoff = ex.num("fields.e2_cutoff", 8.6);
  cfg.b_seed.amplitude = ex.num("fields.b_amplitude", 0.0);
  cfg.b_seed.center = ex.num("fields.b_center", 0.0);
  cfg.b_seed.sigma = ex.num("fields.b_sigma", 0.5);
  cfg.b_seed.cutoff = ex.num("fields.b_cutoff", 8.6);

  std::string mode = ex.text("run.mode", "full");
  if (mode == "full")
    cfg.mode = RunMode::full;
  else if (mode == "vp1d")
    cfg.mode = RunMode::vp1d;
  else if (mode == "cross-validate")
    cfg.mode = RunMode::cross_validate;
  else if (mode == "orbit-audit")
    cfg.mode = RunMode::orbit_audit;
  else
    throw_config("unknown run.mode: " + mode);
  cfg.t_final = ex.num("run.t_final", cfg.t_final);
  cfg.snapshots = ex.flag("run.snapshots", cfg.snapshots);
  cfg.snapshot_stride = ex.integer("run.snapshot_stride", cfg.snapshot_stride);
  cfg.compare_stride = ex.integer("run.compare_stride", cfg.compare_stride);
  if (const std::string* v = ex.find("run.epsilons"))
    cfg.epsilons = parse_double_list("run.epsilons", *v);
  cfg.relativistic = ex.flag("run.relativistic", cfg.relativistic);
  cfg.cfl_factor = ex.num("run.cfl_factor", cfg.cfl_factor);
  cfg.negative_floor = ex.num("run.negative_floor", cfg.negative_floor);
  cfg.support_threshold_factor =
      ex.num("run.support_threshold_factor", cfg.support_threshold_factor);
  cfg.neutrality_tol = ex.num("run.neutrality_tol", cfg.neutrality_tol);
  cfg.orbit_lattice = ex.integer("run.orbit_lattice", cfg.orbit_lattice);
  cfg.orbit_dump_count =
      ex.integer("run.orbit_dump_count", cfg.orbit_dump_count);

  for (const auto& entry : kv) {
    if (!ex.used.count(entry.first))
      throw_config("unknown config key: " + entry.first);
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path,
                           const std::vector<std::string>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_config("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto kv = parse_key_values(buf.str(), path);
  for (const std::string& o : overrides) apply_override(kv, o);
  RunConfig cfg = config_from_map(kv);
  validate_config(cfg);
  return cfg;
}

PhaseGrid make_grid(const RunConfig& cfg) {
  return PhaseGrid::make(cfg.x_min, cfg.x_max, cfg.n_x, cfg.v1_min, cfg.v1_max,
                         cfg.n_v1, -cfg.v2_max, cfg.v2_max, cfg.n_v2);
}

int config_n_steps(const RunConfig& cfg) {
  double dx = (cfg.x_max - cfg.x_min) / cfg.n_x;
  if (!(cfg.t_final > 0.0))
    throw_config("run.t_final must be positive");
  long n = std::lround(cfg.t_final / dx);
  if (n < 1)
    throw_config("run.t_final is shorter than one step (dt = dx)");
  if (n > 2000000)
    throw_config("run.t_final requests an absurd number of steps");
  return static_cast<int>(n);
}

namespace {

void check_bump(const char* what, const BumpSpec& s) {
  if (!(s.sigma > 0.0))
    throw_config(std::string(what) + ": sigma must be positive");
  if (!(s.cutoff > 0.0))
    throw_config(std::string(what) + ": cutoff must be positive");
}

// closed interval [lo, hi] must keep a one-cell margin inside [axis_lo, axis_hi]
void check_fit(const char* what, double lo, double hi, double axis_lo,
               double axis_hi, double spacing) {
  if (lo < axis_lo + spacing || hi > axis_hi - spacing) {
    char msg[220];
    std::snprintf(msg, sizeof msg,
                  "%s support [%.6g, %.6g] must keep a one-cell margin inside "
                  "[%.6g, %.6g]",
                  what, lo, hi, axis_lo, axis_hi);
    throw_config(msg);
  }
}

}  // namespace

void validate_config(const RunConfig& cfg) {
  PhaseGrid g = make_grid(cfg);  // extents and counts
  int n_steps = config_n_steps(cfg);
  double t_run = n_steps * g.dx;

  if (cfg.snapshot_stride < 1)
    throw_config("run.snapshot_stride must be at least 1");
  if (cfg.compare_stride < 1)
    throw_config("run.compare_stride must be at least 1");
  if (cfg.orbit_lattice < 2)
    throw_config("run.orbit_lattice must be at least 2");
  if (cfg.orbit_dump_count < 0)
    throw_config("run.orbit_dump_count must be nonnegative");
  if (!(cfg.cfl_factor > 0.0 && cfg.cfl_factor <= 1.0))
    throw_config("run.cfl_factor must lie in (0, 1]");
  if (!(cfg.negative_floor >= 0.0))
    throw_config("run.negative_floor must be nonnegative");
  if (!(cfg.support_threshold_factor > 0.0))
    throw_config("run.support_threshold_factor must be positive");
  if (!(cfg.neutrality_tol > 0.0))
    throw_config("run.neutrality_tol must be positive");
  if (cfg.epsilons.empty()) throw_config("run.epsilons must not be empty");
  double prev = 0.0;
  for (double e : cfg.epsilons) {
    if (!(e > prev))
      throw_config("run.epsilons must be positive and strictly increasing");
    prev = e;
  }

  const ProfileSpec& p = cfg.profile;
  if (!(p.amplitude >= 0.0))
    throw_config("profile.amplitude must be nonnegative");
  check_bump("profile x bump", p.x);
  check_bump("profile v1 bump", p.v1);
  check_bump("profile v2 bump", p.v2);
  if (!(std::fabs(p.x_mod_amp) <= 1.0))
    throw_config("profile.x_mod_amp must lie in [-1, 1] to keep f nonnegative");
  if (p.preset == ProfilePreset::two_stream && !(p.beam_speed > 0.0))
    throw_config("profile.beam_speed must be positive for two-stream");
  if ((p.preset == ProfilePreset::even_bump ||
       p.preset == ProfilePreset::two_stream) &&
      p.v2.center != 0.0)
    throw_config("this preset requires a centered v2 bump (profile.v2_center = 0)");
  check_bump("background bump", cfg.background);
  if (!(cfg.background.amplitude >= 0.0))
    throw_config("background.amplitude must be nonnegative");
  check_bump("E2 seed bump", cfg.e2_seed);
  check_bump("B seed bump", cfg.b_seed);

  SupportBox box = profile_support(p);
  if (!box.empty) {
    check_fit("profile x", box.x_lo, box.x_hi, g.x_min, g.x_max, g.dx);
    check_fit("profile v1", box.v1_lo, box.v1_hi, g.v1_min, g.v1_max, g.dv1);
    check_fit("profile v2", box.v2_lo, box.v2_hi, g.v2_min, g.v2_max, g.dv2);

    // free-streaming envelope: support can spread at most this fast in x
    double reach = std::max(std::fabs(box.v1_lo), std::fabs(box.v1_hi));
    if (cfg.relativistic) reach = reach / std::sqrt(1.0 + reach * reach);
    check_fit("free-streaming envelope of the profile", box.x_lo - reach * t_run,
              box.x_hi + reach * t_run, g.x_min, g.x_max, g.dx);
  }
  if (cfg.background.amplitude > 0.0) {
    double r = bump_support_radius(cfg.background);
    check_fit("background", cfg.background.center - r,
              cfg.background.center + r, g.x_min, g.x_max, g.dx);
  }
  for (const BumpSpec* seed : {&cfg.e2_seed, &cfg.b_seed}) {
    if (seed->amplitude == 0.0) continue;
    double r = bump_support_radius(*seed);
    const char* what = seed == &cfg.e2_seed ? "E2 seed" : "B seed";
    check_fit(what, seed->center - r, seed->center + r, g.x_min, g.x_max, g.dx);
    char lab[64];
    std::snprintf(lab, sizeof lab, "light-cone envelope of the %s", what);
    check_fit(lab, seed->center - r - t_run, seed->center + r + t_run, g.x_min,
              g.x_max, g.dx);
  }

  if (cfg.mode == RunMode::vp1d || cfg.mode == RunMode::cross_validate) {
    if (cfg.relativistic)
      throw_config("the reduced solver modes are nonrelativistic");
    if (cfg.e2_seed.amplitude != 0.0 || cfg.b_seed.amplitude != 0.0)
      throw_config("reduced solver modes require zero transverse field seeds");
    if (!profile_even_in_v2(p))
      throw_config("reduced solver modes require a profile even in v2");
  }
  if (cfg.mode == RunMode::orbit_audit && cfg.relativistic)
    throw_config("orbit audit integrates the nonrelativistic characteristic system");
}

std::string config_echo(const RunConfig& cfg) {
  std::ostringstream out;
  out << "[grid]\n";
  out << "x_min = " << fmt(cfg.x_min) << "\n";
  out << "x_max = " << fmt(cfg.x_max) << "\n";
  out << "n_x = " << cfg.n_x << "\n";
  out << "v1_min = " << fmt(cfg.v1_min) << "\n";
  out << "v1_max = " << fmt(cfg.v1_max) << "\n";
  out << "n_v1 = " << cfg.n_v1 << "\n";
  out << "v2_max = " << fmt(cfg.v2_max) << "\n";
  out << "n_v2 = " << cfg.n_v2 << "\n";
  out << "[profile]\n";
  out << "preset = " << preset_name(cfg.profile.preset) << "\n";
  out << "amplitude = " << fmt(cfg.profile.amplitude) << "\n";
  out << "x_center = " << fmt(cfg.profile.x.center) << "\n";
  out << "x_sigma = " << fmt(cfg.profile.x.sigma) << "\n";
  out << "x_cutoff = " << fmt(cfg.profile.x.cutoff) << "\n";
  out << "x_mod_amp = " << fmt(cfg.profile.x_mod_amp) << "\n";
  out << "x_mod_k = " << fmt(cfg.profile.x_mod_k) << "\n";
  out << "v1_center = " << fmt(cfg.profile.v1.center) << "\n";
  out << "v1_sigma = " << fmt(cfg.profile.v1.sigma) << "\n";
  out << "v1_cutoff = " << fmt(cfg.profile.v1.cutoff) << "\n";
  out << "beam_speed = " << fmt(cfg.profile.beam_speed) << "\n";
  out << "v2_center = " << fmt(cfg.profile.v2.center) << "\n";
  out << "v2_sigma = " << fmt(cfg.profile.v2.sigma) << "\n";
  out << "v2_cutoff = " << fmt(cfg.profile.v2.cutoff) << "\n";
  out << "[background]\n";
  out << "amplitude = " << fmt(cfg.background.amplitude) << "\n";
  out << "center = " << fmt(cfg.background.center) << "\n";
  out << "sigma = " << fmt(cfg.background.sigma) << "\n";
  out << "cutoff = " << fmt(cfg.background.cutoff) << "\n";
  out << "neutralize = " << (cfg.neutralize ? "true" : "false") << "\n";
  out << "[fields]\n";
  out << "e2_amplitude = " << fmt(cfg.e2_seed.amplitude) << "\n";
  out << "e2_center = " << fmt(cfg.e2_seed.center) << "\n";
  out << "e2_sigma = " << fmt(cfg.e2_seed.sigma) << "\n";
  out << "e2_cutoff = " << fmt(cfg.e2_seed.cutoff) << "\n";
  out << "b_amplitude = " << fmt(cfg.b_seed.amplitude) << "\n";
  out << "b_center = " << fmt(cfg.b_seed.center) << "\n";
  out << "b_sigma = " << fmt(cfg.b_seed.sigma) << "\n";
  out << "b_cutoff = " << fmt(cfg.b_seed.cutoff) << "\n";
  out << "[run]\n";
  out << "mode = " << run_mode_name(cfg.mode) << "\n";
  out << "t_final = " << fmt(cfg.t_final) << "\n";
  out << "snapshots = " << (cfg.snapshots ? "true" : "false") << "\n";
  out << "snapshot_stride = " << cfg.snapshot_stride << "\n";
  out << "compare_stride = " << cfg.compare_stride << "\n";
  out << "epsilons = ";
  for (std::size_t i = 0; i < cfg.epsilons.size(); ++i)
    out << (i ? "," : "") << fmt(cfg.epsilons[i]);
  out << "\n";
  out << "relativistic = " << (cfg.relativistic ? "true" : "false") << "\n";
  out << "cfl_factor = " << fmt(cfg.cfl_factor) << "\n";
  out << "negative_floor = " << fmt(cfg.negative_floor) << "\n";
  out << "support_threshold_factor = " << fmt(cfg.support_threshold_factor)
      << "\n";
  out << "neutrality_tol = " << fmt(cfg.neutrality_tol) << "\n";
  out << "orbit_lattice = " << cfg.orbit_lattice << "\n";
  out << "orbit_dump_count = " << cfg.orbit_dump_count << "\n";
  return out.str();
}

}  // namespace vmsim
