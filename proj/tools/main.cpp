#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "config.hpp"
#include "runner.hpp"

int main(int argc, char** argv) {
  using namespace stirap::cli;

  CLI::App app{"Two-atom two-mode STIRAP simulation with entropy and strong-subadditivity diagnostics"};
  app.footer(config_reference());

  std::string config_path;
  std::string preset;
  std::string out_dir;
  int steps = 0;
  std::string delta_tau;
  app.add_option("--config", config_path, "Config file (key = value lines)")->check(CLI::ExistingFile);
  app.add_option("--preset", preset, "fig2 | fig3 | ghz | custom (overrides the config file)");
  app.add_option("--out", out_dir, "Output directory (overrides output_dir)");
  app.add_option("--steps", steps, "RK4 steps per run (overrides steps)");
  app.add_option("--delta-tau", delta_tau, "Comma-separated detunings (overrides delta_tau_list)");
  CLI11_PARSE(app, argc, argv);

  try {
    ConfigEntries entries;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot read config file " + config_path);
      std::ostringstream text;
      text << in.rdbuf();
      entries = parse_entries(text.str());
    }
    if (!preset.empty()) entries["preset"] = {preset, 0};
    if (!out_dir.empty()) entries["output_dir"] = {out_dir, 0};
    if (app.count("--steps")) entries["steps"] = {std::to_string(steps), 0};
    if (!delta_tau.empty()) {
      entries.erase("delta_tau");
      entries["delta_tau_list"] = {delta_tau, 0};
    }
    return run(build_config(entries), std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
