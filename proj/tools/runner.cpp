#include "runner.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace stirap::cli {

namespace {

std::string num(double v) { return fmt::format("{:.10g}", v); }

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void require_finite(const EntropyReport& r) {
  for (const double v : {r.S_A, r.S_AB, r.S_An, r.S_ABn, r.E, r.Ic_AB})
    if (!std::isfinite(v)) throw std::runtime_error(fmt::format("non-finite diagnostic at s = {}", r.s));
}

}  // namespace

double RunResult::min_E() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : reports) m = std::min(m, r.E);
  return m;
}

double RunResult::max_norm_drift() const {
  double m = 0.0;
  for (const auto& f : frames) m = std::max(m, std::abs(f.state.norm() - 1.0));
  return m;
}

RunResult simulate(const ExperimentConfig& config, double delta_tau) {
  RunResult run;
  run.delta_tau = delta_tau;
  run.params = config.params;
  run.params.delta_tau = delta_tau;
  run.frames = evolve(run.params, config.grid());
  run.reports.reserve(run.frames.size());
  for (const auto& frame : run.frames) {
    run.reports.push_back(ssi_parameter(frame));
    require_finite(run.reports.back());
  }
  return run;
}

std::string detuning_tag(double delta_tau) { return fmt::format("{:g}", delta_tau); }

void write_trajectory_csv(std::ostream& out, const RunResult& run) {
  out << "s,E,S_A,S_AB,S_An,S_ABn,Ic_AB,dark_overlap,pop_1,pop_6\n";
  for (std::size_t i = 0; i < run.frames.size(); ++i) {
    const auto& f = run.frames[i];
    const auto& r = run.reports[i];
    out << num(f.s) << ',' << num(r.E) << ',' << num(r.S_A) << ',' << num(r.S_AB) << ',' << num(r.S_An)
        << ',' << num(r.S_ABn) << ',' << num(r.Ic_AB) << ',' << (f.dark_overlap ? num(*f.dark_overlap) : "")
        << ',' << num(f.state.population(0)) << ',' << num(f.state.population(5)) << '\n';
  }
}

void write_darkstate_csv(std::ostream& out, const RunResult& run) {
  out << "s,alpha_over_P,beta_over_P,gamma_over_P,delta_over_P\n";
  for (const auto& f : run.frames) {
    const auto dark = dark_state(f.g1_tau, f.g2_tau, run.params);
    out << num(f.s);
    if (dark.defined) {
      for (const double c : dark.coefficients()) out << ',' << num(c);
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
}

void write_summary(std::ostream& out, const ExperimentConfig& config, const std::vector<RunResult>& runs) {
  const auto grid = config.grid();
  const auto& p = config.params;
  fmt::print(out, "preset={}\nn={}\nmu={}\ng10_tau={}\ng20_tau={}\nT_over_tau={}\n", to_string(config.preset), p.n,
             p.mu, num(p.g10_tau), num(p.g20_tau), num(p.T_over_tau));
  fmt::print(out, "s_start={}\ns_end={}\nsteps={}\nrecord_every={}\n", num(grid.s_start), num(grid.s_end),
             grid.steps, grid.record_every);
  for (const auto& run : runs) {
    const auto& f = run.frames.back();
    const auto& r = run.reports.back();
    double min_overlap = 1.0;
    for (const auto& fr : run.frames)
      if (fr.dark_overlap) min_overlap = std::min(min_overlap, *fr.dark_overlap);
    fmt::print(out, "\n[delta_tau={}]\n", detuning_tag(run.delta_tau));
    fmt::print(out, "final_s={}\nfinal_E={}\nfinal_S_A={}\nfinal_S_AB={}\nfinal_S_An={}\nfinal_S_ABn={}\n", num(f.s),
               num(r.E), num(r.S_A), num(r.S_AB), num(r.S_An), num(r.S_ABn));
    fmt::print(out, "final_Ic_AB={}\nfinal_pop_1={}\nfinal_pop_6={}\n", num(r.Ic_AB), num(f.state.population(0)),
               num(f.state.population(5)));
    fmt::print(out, "min_E={}\nmin_dark_overlap={}\nmax_norm_drift={}\n", num(run.min_E()), num(min_overlap),
               num(run.max_norm_drift()));
  }
}

void write_ghz_report(std::ostream& out, const GhzReport& r) {
  // +0.0 folds a signed zero into "0.0000".
  const auto fixed = [](double v) { return fmt::format("{:.4f}", v + 0.0); };
  fmt::print(out, "S_ABC={}\nS_A={}\nS_AB={}\nS_BC={}\nS_AC={}\nE={}\n", fixed(r.S_ABC), fixed(r.S_A), fixed(r.S_AB),
             fixed(r.S_BC), fixed(r.S_AC), fixed(r.E));
  fmt::print(out, "equality_residual={:.3e}\nsupports_compatible={}\n", r.equality.residual,
             r.equality.supports_compatible ? "true" : "false");
}

int run(const ExperimentConfig& config, std::ostream& log) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec || !fs::is_directory(config.output_dir))
    throw std::runtime_error("cannot create output directory " + config.output_dir.string());

  if (config.preset == Preset::ghz) {
    const auto report = ghz_report();
    auto file = open_for_write(config.output_dir / "ghz_report.txt");
    write_ghz_report(file, report);
    write_ghz_report(log, report);
    if (!file) throw std::runtime_error("write failed for ghz_report.txt");
    return 0;
  }

  std::vector<std::future<RunResult>> pending;
  for (const double dt : config.detuning_list)
    pending.push_back(std::async(std::launch::async, [&config, dt] { return simulate(config, dt); }));
  std::vector<RunResult> runs;
  for (auto& p : pending) runs.push_back(p.get());

  for (const auto& r : runs) {
    const auto tag = detuning_tag(r.delta_tau);
    {
      auto file = open_for_write(config.output_dir / ("trajectory_" + tag + ".csv"));
      write_trajectory_csv(file, r);
      if (!file) throw std::runtime_error("write failed for trajectory_" + tag + ".csv");
    }
    {
      auto file = open_for_write(config.output_dir / ("darkstate_" + tag + ".csv"));
      write_darkstate_csv(file, r);
      if (!file) throw std::runtime_error("write failed for darkstate_" + tag + ".csv");
    }
    fmt::print(log, "delta_tau={}: {} frames, final E={}, final pop_6={}, min E={}\n", tag, r.frames.size(),
               num(r.reports.back().E), num(r.frames.back().state.population(5)), num(r.min_E()));
  }
  auto summary = open_for_write(config.output_dir / "summary.txt");
  write_summary(summary, config, runs);
  if (!summary) throw std::runtime_error("write failed for summary.txt");
  return 0;
}

}  // namespace stirap::cli
