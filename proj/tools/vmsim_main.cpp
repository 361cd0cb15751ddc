#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vmsim/config.hpp"
#include "vmsim/errors.hpp"
#include "vmsim/parallel.hpp"
#include "vmsim/runner.hpp"
#include "vmsim/version.hpp"

namespace {

int exit_code_for(vmsim::ErrorKind kind) {
  switch (kind) {
    case vmsim::ErrorKind::config: return 2;
    case vmsim::ErrorKind::numerical: return 3;
    case vmsim::ErrorKind::support: return 4;
  }
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1.5D Vlasov-Maxwell simulator (1 space + 2 velocity dimensions)"};
  app.set_version_flag("--version", VMSIM_VERSION);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "vmsim_out";
  std::string run_dir;
  std::string quantity;
  std::string plot_out;
  std::vector<std::string> overrides;
  int threads = vmsim::default_thread_count();

  CLI::App* run = app.add_subcommand("run", "execute a configured run");
  run->add_option("--config", config_path, "run configuration file")->required();
  run->add_option("--out", out_dir, "output directory (default vmsim_out)");
  run->add_option("--threads", threads, "worker threads (default: hardware)");
  run->add_option("--override", overrides,
                  "section.key=value, repeatable, applied after the file");

  CLI::App* validate =
      app.add_subcommand("validate-config", "parse and validate, run nothing");
  validate->add_option("--config", config_path, "run configuration file")
      ->required();
  validate->add_option("--override", overrides,
                       "section.key=value, repeatable, applied after the file");

  CLI::App* plot =
      app.add_subcommand("plot", "emit columnar plot data from a run directory");
  plot->add_option("--run", run_dir, "finished run directory")->required();
  plot->add_option("--quantity", quantity, "what to extract")->required();
  plot->add_option("--out", plot_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      vmsim::RunConfig cfg = vmsim::load_config_file(config_path, overrides);
      vmsim::RunSummary sum = vmsim::run_simulation(cfg, out_dir, threads);
      std::printf("run complete: mode=%s steps=%d t_final=%.17g\n",
                  vmsim::run_mode_name(cfg.mode), sum.n_steps, sum.t_final);
      std::printf("artifacts written to %s\n", out_dir.c_str());
    } else if (validate->parsed()) {
      vmsim::RunConfig cfg = vmsim::load_config_file(config_path, overrides);
      std::printf("config ok\n%s", vmsim::config_echo(cfg).c_str());
    } else if (plot->parsed()) {
      vmsim::emit_plot_data(run_dir, quantity, plot_out);
    }
  } catch (const vmsim::SimError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
  return 0;
}
