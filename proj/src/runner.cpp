#include "vmsim/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vmsim/characteristics.hpp"
#include "vmsim/diagnostics.hpp"
#include "vmsim/errors.hpp"
#include "vmsim/reduction.hpp"
#include "vmsim/snapshot.hpp"
#include "vmsim/solver.hpp"
#include "vmsim/version.hpp"

namespace fs = std::filesystem;

namespace vmsim {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_config("cannot open output file: " + path.string());
  out << content;
  if (!out) throw_config("failed writing output file: " + path.string());
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_config("cannot open file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::config: return "config";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::support: return "support";
  }
  return "numerical";
}

struct InitialState {
  PhaseGrid grid;
  DistributionFunction f;
  Background bg;
  FieldState fields;
  double max_f0 = 0.0;
  double f_total = 0.0;
  double field_threshold = 0.0;
  StepOptions opt;
  DiagnosticsOptions dopt;
};

InitialState build_initial_state(const RunConfig& cfg, int threads) {
  PhaseGrid g = make_grid(cfg);
  InitialState st{g, sample_initial_distribution(g, cfg.profile), {},
                  FieldState::zero(g.nx_nodes(), g.dx), 0, 0, 0, {}, {}};
  st.max_f0 = max_abs(st.f);
  st.f_total = total_charge(st.f);
  st.bg = sample_background(g, cfg.background, cfg.neutralize, st.f_total);
  if (!cfg.neutralize) {
    double scale = std::max(1.0, std::fabs(st.f_total));
    if (!(std::fabs(st.bg.total - st.f_total) <= cfg.neutrality_tol * scale)) {
      char msg[200];
      std::snprintf(msg, sizeof msg,
                    "background does not neutralize the profile: integral of b "
                    "= %.17g vs integral of f = %.17g; enable "
                    "background.neutralize or adjust amplitudes",
                    st.bg.total, st.f_total);
      throw_config(msg);
    }
  }

  std::vector<double> e2v = sample_bump(cfg.e2_seed, g.x_node);
  std::vector<double> bv = sample_bump(cfg.b_seed, g.x_node);
  for (const std::vector<double>* fv : {&e2v, &bv}) {
    if (fv->front() != 0.0 || fv->back() != 0.0)
      throw_config("transverse field seed must vanish on the boundary nodes");
  }

  Moments mom0 = compute_moments(st.f, st.bg, cfg.relativistic, threads);
  std::vector<double> e1v =
      init_E1_from_gauss(mom0.rho, g.dx, cfg.neutrality_tol);
  st.fields = FieldState::from_components(e1v, e2v, bv, g.dx, 0.0);

  double fmax = 1.0;
  for (std::size_t i = 0; i < e2v.size(); ++i)
    fmax = std::max(fmax, std::max(std::fabs(e2v[i]), std::fabs(bv[i])));
  st.field_threshold = cfg.support_threshold_factor * fmax;

  st.opt.cfl_factor = cfg.cfl_factor;
  st.opt.negative_floor = cfg.negative_floor;
  st.opt.support_threshold = cfg.support_threshold_factor * st.max_f0;
  st.opt.check_support = true;
  st.opt.relativistic = cfg.relativistic;
  st.opt.neutrality_tol = cfg.neutrality_tol;
  st.opt.threads = threads;

  st.dopt.epsilons = cfg.epsilons;
  st.dopt.support_threshold = st.opt.support_threshold;
  return st;
}

std::string manifest_text(const RunConfig& cfg, const InitialState& st,
                          int n_steps) {
  const PhaseGrid& g = st.grid;
  std::ostringstream out;
  out << "[meta]\n";
  out << "format = vmsim-manifest-1\n";
  out << "version = " VMSIM_VERSION "\n";
  out << "[scheme]\n";
  out << "quadrature = trapezoid-nodes\n";
  out << "interpolation = natural-cubic-spline\n";
  out << "splitting = strang-x-v1-v2-x\n";
  out << "field_update = lightcone-node-shift\n";
  out << "time_step = dt-equals-dx\n";
  out << "e1_kick = gauss-mid-density\n";
  out << "v2_sweep = reversal-averaged\n";
  out << "orbit_integrator = rk4-half-step\n";
  out << "[derived]\n";
  out << "dx = " << fmt17(g.dx) << "\n";
  out << "dv1 = " << fmt17(g.dv1) << "\n";
  out << "dv2 = " << fmt17(g.dv2) << "\n";
  out << "dt = " << fmt17(g.dx) << "\n";
  out << "n_steps = " << n_steps << "\n";
  out << "t_final_realized = " << fmt17(n_steps * g.dx) << "\n";
  out << "support_threshold = " << fmt17(st.opt.support_threshold) << "\n";
  out << "field_boundary_threshold = " << fmt17(st.field_threshold) << "\n";
  out << "max_f0 = " << fmt17(st.max_f0) << "\n";
  out << "f_total = " << fmt17(st.f_total) << "\n";
  out << "background_total = " << fmt17(st.bg.total) << "\n";
  out << config_echo(cfg);
  return out.str();
}

void check_record_finite(const DiagnosticsRecord& rec, int step) {
  bool ok = std::isfinite(rec.kinetic_energy) && std::isfinite(rec.field_energy) &&
            std::isfinite(rec.total_charge) && std::isfinite(rec.q_support) &&
            std::isfinite(rec.sup_a) && std::isfinite(rec.gauss_residual) &&
            std::isfinite(rec.sym_error) && std::isfinite(rec.min_v1_gap);
  for (double s : rec.seps_sup) ok = ok && std::isfinite(s);
  if (!ok) {
    char msg[120];
    std::snprintf(msg, sizeof msg, "non-finite diagnostic value at step %d", step);
    throw_numerical(msg);
  }
}

std::string snapshot_name(int step) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "snapshot_%06d.bin", step);
  return buf;
}

double charge_drift(const std::vector<DiagnosticsRecord>& recs) {
  if (recs.empty()) return 0.0;
  double q0 = recs.front().total_charge;
  double scale = std::fabs(q0) > 0.0 ? std::fabs(q0) : 1.0;
  double worst = 0.0;
  for (const DiagnosticsRecord& r : recs)
    worst = std::max(worst, std::fabs(r.total_charge - q0) / scale);
  return worst;
}

struct LoopOutput {
  std::vector<DiagnosticsRecord> records;
};

// Shared full-solver loop: diagnostics every step, snapshots at the stride,
// optional field history for the orbit audit.
LoopOutput run_full_loop(const RunConfig& cfg, InitialState& st,
                         const fs::path& dir, int n_steps,
                         FieldHistory* history, int* progress) {
  LoopOutput out;
  out.records.reserve(n_steps + 1);
  std::ofstream log(dir / "run.log", std::ios::binary);
  if (!log) throw_config("cannot open run.log");
  log << "# step time clamped_mass\n";

  DiagnosticsRecord rec = record_diagnostics(st.f, st.fields, st.bg, st.dopt);
  check_record_finite(rec, 0);
  out.records.push_back(rec);
  if (history) history->push(st.fields);
  if (cfg.snapshots)
    write_snapshot((dir / snapshot_name(0)).string(), st.f, st.fields);

  for (int step = 1; step <= n_steps; ++step) {
    StepReport rep = step_strang(st.f, st.fields, st.bg, st.grid.dx, st.opt);
    check_field_boundary(st.fields, st.field_threshold);
    rec = record_diagnostics(st.f, st.fields, st.bg, st.dopt);
    check_record_finite(rec, step);
    out.records.push_back(rec);
    if (history) history->push(st.fields);
    log << step << ' ' << fmt17(st.f.time) << ' ' << fmt17(rep.clamped_mass)
        << '\n';
    if (cfg.snapshots && (step % cfg.snapshot_stride == 0 || step == n_steps))
      write_snapshot((dir / snapshot_name(step)).string(), st.f, st.fields);
    if (progress) *progress = step;
  }
  write_diagnostics_csv((dir / "diagnostics.csv").string(), st.dopt,
                        out.records);
  return out;
}

LoopOutput run_vp_loop(const RunConfig& cfg, InitialState& st,
                       const fs::path& dir, int n_steps, int* progress) {
  check_v2_even(st.f);
  LoopOutput out;
  out.records.reserve(n_steps + 1);
  std::ofstream log(dir / "run.log", std::ios::binary);
  if (!log) throw_config("cannot open run.log");
  log << "# step time clamped_mass\n";

  VPState vp(st.f);
  const PhaseGrid& g = st.grid;
  std::vector<double> zeros(g.nx_nodes(), 0.0);

  auto record_now = [&](int step) {
    Moments mom = compute_moments(vp.f, st.bg, false, st.opt.threads);
    std::vector<double> e1 =
        init_E1_from_gauss(mom.rho, g.dx, cfg.neutrality_tol);
    FieldState fsnow =
        FieldState::from_components(e1, zeros, zeros, g.dx, vp.f.time);
    DiagnosticsRecord rec = record_diagnostics(vp.f, fsnow, st.bg, st.dopt);
    check_record_finite(rec, step);
    out.records.push_back(rec);
    if (cfg.snapshots &&
        (step == 0 || step % cfg.snapshot_stride == 0 || step == n_steps))
      write_snapshot((dir / snapshot_name(step)).string(), vp.f, fsnow);
  };

  record_now(0);
  for (int step = 1; step <= n_steps; ++step) {
    StepReport rep = step_vp(vp, st.bg, g.dx, st.opt);
    record_now(step);
    log << step << ' ' << fmt17(vp.f.time) << ' ' << fmt17(rep.clamped_mass)
        << '\n';
    if (progress) *progress = step;
  }
  write_diagnostics_csv((dir / "diagnostics.csv").string(), st.dopt,
                        out.records);
  return out;
}

void write_cross_report(const fs::path& dir, const CrossValidationReport& rep) {
  std::ostringstream csv;
  csv << "time,max_df,l1_df,max_de1,l1_de1\n";
  for (const CrossValidationRow& r : rep.rows) {
    csv << fmt17(r.time) << ',' << fmt17(r.max_df) << ',' << fmt17(r.l1_df)
        << ',' << fmt17(r.max_de1) << ',' << fmt17(r.l1_de1) << '\n';
  }
  write_text_file(dir / "cross_validation.csv", csv.str());

  std::ostringstream txt;
  txt << "cross-validation of the full solver against the reduced solver\n";
  txt << "rows = " << rep.rows.size() << "\n";
  txt << "max_df = " << fmt17(rep.max_df) << "\n";
  txt << "l1_df = " << fmt17(rep.l1_df) << "\n";
  txt << "max_de1 = " << fmt17(rep.max_de1) << "\n";
  write_text_file(dir / "cross_validation.txt", txt.str());
}

struct OrbitAuditResult {
  double max_drift = 0.0;
  double max_moc_error = 0.0;
  double min_v1_gap = 1.0;
  int count = 0;
};

OrbitAuditResult run_orbit_audit(const RunConfig& cfg, const InitialState& st,
                                 const DistributionFunction& f_final,
                                 const FieldHistory& history,
                                 const fs::path& dir) {
  const PhaseGrid& g = st.grid;
  const DistributionFunction& f0 = st.f;
  int ilo = g.n_x + 1, ihi = -1, jlo = g.n_v1 + 1, jhi = -1, klo = g.n_v2 + 1,
      khi = -1;
  for (int i = 0; i <= g.n_x; ++i)
    for (int j = 0; j <= g.n_v1; ++j)
      for (int k = 0; k <= g.n_v2; ++k)
        if (f0.values(i, j, k) > st.opt.support_threshold) {
          ilo = std::min(ilo, i), ihi = std::max(ihi, i);
          jlo = std::min(jlo, j), jhi = std::max(jhi, j);
          klo = std::min(klo, k), khi = std::max(khi, k);
        }
  if (ihi < 0) throw_config("orbit audit needs a profile with nonempty support");

  auto lattice = [&](int lo, int hi) {
    std::vector<int> picks;
    for (int m = 0; m < cfg.orbit_lattice; ++m)
      picks.push_back(lo + static_cast<int>(std::llround(
                               m * double(hi - lo) / (cfg.orbit_lattice - 1))));
    return picks;
  };
  std::vector<int> is = lattice(ilo, ihi), js = lattice(jlo, jhi),
                   ks = lattice(klo, khi);

  double t_run = f_final.time;
  double substep = 0.5 * g.dx;
  fs::create_directories(dir / "orbits");

  std::ostringstream csv;
  csv << "orbit,x0,v1_0,v2_0,v2A_drift,moc_error,min_v1_gap\n";
  OrbitAuditResult res;
  for (int ia : is)
    for (int jb : js)
      for (int kc : ks) {
        double x0 = g.x_node[ia], v10 = g.v1_node[jb], v20 = g.v2_node[kc];
        auto traj =
            integrate_characteristic(history, t_run, x0, v10, v20, 0.0, substep);
        double drift = v2A_drift(history, traj);
        const CharacteristicState& foot = traj.back();
        double moc = std::fabs(f_final.values(ia, jb, kc) -
                               profile_eval(cfg.profile, foot.x, foot.v1,
                                            foot.v2));
        double gap = 1.0;
        for (const CharacteristicState& s : traj)
          gap = std::min(gap, std::fabs(std::fabs(s.v1) - 1.0));

        if (res.count < cfg.orbit_dump_count) {
          std::ostringstream orb;
          orb << "s,X,V1,V2,A,invariant\n";
          for (const CharacteristicState& s : traj) {
            double av = history.eval(FieldHistory::Component::a, s.s, s.x);
            orb << fmt17(s.s) << ',' << fmt17(s.x) << ',' << fmt17(s.v1) << ','
                << fmt17(s.v2) << ',' << fmt17(av) << ',' << fmt17(s.v2 + av)
                << '\n';
          }
          char name[40];
          std::snprintf(name, sizeof name, "orbit_%03d.csv", res.count);
          write_text_file(dir / "orbits" / name, orb.str());
        }

        csv << res.count << ',' << fmt17(x0) << ',' << fmt17(v10) << ','
            << fmt17(v20) << ',' << fmt17(drift) << ',' << fmt17(moc) << ','
            << fmt17(gap) << '\n';
        res.max_drift = std::max(res.max_drift, drift);
        res.max_moc_error = std::max(res.max_moc_error, moc);
        res.min_v1_gap = std::min(res.min_v1_gap, gap);
        ++res.count;
      }
  write_text_file(dir / "orbit_summary.csv", csv.str());
  return res;
}

}  // namespace

RunSummary run_simulation(const RunConfig& cfg, const std::string& out_dir,
                          int threads) {
  validate_config(cfg);
  if (threads < 1) throw_config("thread count must be at least 1");
  fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw_config("cannot create output directory: " + out_dir);

  InitialState st = build_initial_state(cfg, threads);
  int n_steps = config_n_steps(cfg);
  write_text_file(dir / "manifest.txt", manifest_text(cfg, st, n_steps));

  RunSummary sum;
  sum.n_steps = n_steps;
  sum.t_final = n_steps * st.grid.dx;

  int progress = 0;
  auto write_status = [&](const char* status, const char* reason,
                          const std::string& message) {
    std::ostringstream out;
    out << "status = " << status << "\n";
    out << "mode = " << run_mode_name(cfg.mode) << "\n";
    out << "steps_completed = " << progress << "\n";
    out << "steps_requested = " << n_steps << "\n";
    if (reason) {
      out << "reason = " << reason << "\n";
      if (!message.empty()) out << "message = " << message << "\n";
      write_text_file(dir / "status.txt", out.str());
      return;
    }
    if (cfg.mode == RunMode::full || cfg.mode == RunMode::vp1d ||
        cfg.mode == RunMode::orbit_audit) {
      out << "energy_drift_rel = " << fmt17(sum.energy_drift_rel) << "\n";
      out << "charge_drift_rel = " << fmt17(sum.charge_drift_rel) << "\n";
    }
    if (cfg.mode == RunMode::cross_validate) {
      out << "max_df = " << fmt17(sum.max_df) << "\n";
      out << "max_de1 = " << fmt17(sum.max_de1) << "\n";
    }
    if (cfg.mode == RunMode::orbit_audit) {
      out << "orbit_max_v2a_drift = " << fmt17(sum.orbit_max_drift) << "\n";
      out << "orbit_max_moc_error = " << fmt17(sum.orbit_max_moc_error) << "\n";
      out << "orbit_min_v1_gap = " << fmt17(sum.orbit_min_v1_gap) << "\n";
    }
    write_text_file(dir / "status.txt", out.str());
  };

  try {
    switch (cfg.mode) {
      case RunMode::full: {
        LoopOutput out = run_full_loop(cfg, st, dir, n_steps, nullptr, &progress);
        sum.energy_drift_rel = energy_drift(out.records);
        sum.charge_drift_rel = charge_drift(out.records);
        break;
      }
      case RunMode::vp1d: {
        LoopOutput out = run_vp_loop(cfg, st, dir, n_steps, &progress);
        sum.energy_drift_rel = energy_drift(out.records);
        sum.charge_drift_rel = charge_drift(out.records);
        break;
      }
      case RunMode::cross_validate: {
        CrossValidationReport rep = cross_validate(
            st.f, st.bg, st.grid.dx, n_steps, cfg.compare_stride, st.opt);
        progress = n_steps;
        sum.max_df = rep.max_df;
        sum.max_de1 = rep.max_de1;
        write_cross_report(dir, rep);
        break;
      }
      case RunMode::orbit_audit: {
        FieldHistory history(st.grid.x_min, st.grid.dx, st.grid.nx_nodes());
        DistributionFunction f0 = st.f;
        LoopOutput out =
            run_full_loop(cfg, st, dir, n_steps, &history, &progress);
        sum.energy_drift_rel = energy_drift(out.records);
        sum.charge_drift_rel = charge_drift(out.records);
        InitialState audit_view = st;
        audit_view.f = f0;
        OrbitAuditResult res =
            run_orbit_audit(cfg, audit_view, st.f, history, dir);
        sum.orbit_max_drift = res.max_drift;
        sum.orbit_max_moc_error = res.max_moc_error;
        sum.orbit_min_v1_gap = res.min_v1_gap;
        break;
      }
    }
  } catch (const SimError& err) {
    write_status("aborted", error_kind_name(err.kind()), err.what());
    throw;
  }
  write_status("ok", nullptr, "");
  return sum;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(line);
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<std::string> snapshot_files(const fs::path& dir) {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string n = entry.path().filename().string();
    if (n.rfind("snapshot_", 0) == 0 && n.size() > 13 &&
        n.substr(n.size() - 4) == ".bin")
      names.push_back(entry.path().string());
  }
  std::sort(names.begin(), names.end());
  if (names.empty())
    throw_config("this quantity needs snapshots; rerun with run.snapshots = true");
  return names;
}

RunConfig config_from_manifest(const std::string& text, const fs::path& origin,
                               double* f_total) {
  auto kv = parse_key_values(text, origin.string());
  auto it = kv.find("derived.f_total");
  if (it == kv.end())
    throw_config("manifest lacks derived.f_total: " + origin.string());
  *f_total = std::strtod(it->second.c_str(), nullptr);
  for (auto i = kv.begin(); i != kv.end();) {
    const std::string& k = i->first;
    if (k.rfind("meta.", 0) == 0 || k.rfind("scheme.", 0) == 0 ||
        k.rfind("derived.", 0) == 0)
      i = kv.erase(i);
    else
      ++i;
  }
  return config_from_map(kv);
}

}  // namespace

void emit_plot_data(const std::string& run_dir, const std::string& quantity,
                    const std::string& out_path) {
  fs::path dir(run_dir);
  std::ostringstream out;

  bool snapshot_based =
      quantity == "E1_xt" || quantity == "E2_xt" || quantity == "B_xt" ||
      quantity == "A_xt" || quantity == "rho_xt" || quantity == "marginal_x_v1";

  if (!snapshot_based) {
    fs::path diag = dir / "diagnostics.csv";
    if (!fs::exists(diag))
      throw_config("run directory has no diagnostics.csv: " + run_dir);
    std::istringstream in(read_text_file(diag));
    std::string line;
    if (!std::getline(in, line)) throw_config("empty diagnostics.csv");
    std::vector<std::string> cols = split_csv(line);

    bool total = quantity == "total_energy";
    std::size_t want = cols.size(), ke = cols.size(), fe = cols.size();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] == quantity) want = c;
      if (cols[c] == "kinetic_energy") ke = c;
      if (cols[c] == "field_energy") fe = c;
    }
    if (!total && want == cols.size()) {
      std::string known;
      for (const std::string& c : cols) known += " " + c;
      throw_config("unknown plot quantity '" + quantity +
                   "'; diagnostics columns are:" + known +
                   " total_energy E1_xt E2_xt B_xt A_xt rho_xt marginal_x_v1");
    }
    out << "# columns: time " << (total ? "total_energy" : quantity) << "\n";
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::vector<std::string> vals = split_csv(line);
      if (vals.size() != cols.size())
        throw_config("ragged row in diagnostics.csv");
      if (total)
        out << vals[0] << ' '
            << fmt17(std::strtod(vals[ke].c_str(), nullptr) +
                     std::strtod(vals[fe].c_str(), nullptr))
            << '\n';
      else
        out << vals[0] << ' ' << vals[want] << '\n';
    }
  } else {
    double f_total = 0.0;
    RunConfig cfg = config_from_manifest(read_text_file(dir / "manifest.txt"),
                                         dir / "manifest.txt", &f_total);
    PhaseGrid g = make_grid(cfg);
    Background bg;
    if (quantity == "rho_xt")
      bg = sample_background(g, cfg.background, cfg.neutralize, f_total);

    out << "# columns: time x "
        << (quantity == "marginal_x_v1" ? "v1 marginal" : quantity) << "\n";
    for (const std::string& file : snapshot_files(dir)) {
      SnapshotData snap = read_snapshot(file);
      if (snap.grid.n_x != g.n_x || snap.grid.n_v1 != g.n_v1 ||
          snap.grid.n_v2 != g.n_v2)
        throw_config("snapshot grid disagrees with the manifest: " + file);
      const std::vector<double>* fieldv = nullptr;
      if (quantity == "E1_xt") fieldv = &snap.e1;
      if (quantity == "E2_xt") fieldv = &snap.e2;
      if (quantity == "B_xt") fieldv = &snap.b;
      if (quantity == "A_xt") fieldv = &snap.a;

      if (fieldv) {
        for (int i = 0; i <= g.n_x; ++i)
          out << fmt17(snap.time) << ' ' << fmt17(g.x_node[i]) << ' '
              << fmt17((*fieldv)[i]) << '\n';
      } else {
        DistributionFunction f(g);
        f.values = snap.f;
        f.time = snap.time;
        if (quantity == "rho_xt") {
          Moments mom = compute_moments(f, bg, false, 1);
          for (int i = 0; i <= g.n_x; ++i)
            out << fmt17(snap.time) << ' ' << fmt17(g.x_node[i]) << ' '
                << fmt17(mom.rho[i]) << '\n';
        } else {
          for (int i = 0; i <= g.n_x; ++i) {
            for (int j = 0; j <= g.n_v1; ++j) {
              double m = mirror_pair_sum(g.n_v2, [&](int k) {
                return PhaseGrid::trapezoid_weight(k, g.n_v2, g.dv2) *
                       f.values(i, j, k);
              });
              out << fmt17(snap.time) << ' ' << fmt17(g.x_node[i]) << ' '
                  << fmt17(g.v1_node[j]) << ' ' << fmt17(m) << '\n';
            }
          }
        }
      }
      out << '\n';
    }
  }

  if (out_path.empty()) {
    std::fputs(out.str().c_str(), stdout);
  } else {
    write_text_file(out_path, out.str());
  }
}

}  // namespace vmsim
