#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"
#include "stirap/dynamics.hpp"
#include "stirap/entropy.hpp"

namespace stirap::cli {

/// One trajectory with the per-frame entropy diagnostics.
struct RunResult {
  double delta_tau = 0.0;
  ModelParams params;
  std::vector<TrajectoryFrame> frames;
  std::vector<EntropyReport> reports;

  double min_E() const;
  double max_norm_drift() const;
};

/// Evolves one detuning of the experiment and evaluates every frame.
/// Throws std::runtime_error if a diagnostic comes out non-finite.
RunResult simulate(const ExperimentConfig& config, double delta_tau);

/// Columns: s,E,S_A,S_AB,S_An,S_ABn,Ic_AB,dark_overlap,pop_1,pop_6.
void write_trajectory_csv(std::ostream& out, const RunResult& run);
/// Columns: s,alpha_over_P,beta_over_P,gamma_over_P,delta_over_P.
/// Fields are empty where the dark state is undefined.
void write_darkstate_csv(std::ostream& out, const RunResult& run);
void write_summary(std::ostream& out, const ExperimentConfig& config, const std::vector<RunResult>& runs);
void write_ghz_report(std::ostream& out, const GhzReport& report);

/// "trajectory_60.csv" style suffix for a detuning.
std::string detuning_tag(double delta_tau);

/// Runs the experiment and writes its files into config.output_dir.
/// Throws on any failure; returns the process exit status otherwise.
int run(const ExperimentConfig& config, std::ostream& log);

}  // namespace stirap::cli
