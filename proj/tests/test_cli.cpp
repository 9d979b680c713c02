#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "config.hpp"
#include "runner.hpp"

namespace stirap::cli {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("stirap_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(ParseConfig, Fig2PresetAlone) {
  const auto c = parse_config("preset = fig2\n");
  EXPECT_EQ(c.preset, Preset::fig2);
  EXPECT_EQ(c.params.n, 2);
  EXPECT_EQ(c.params.mu, 0);
  EXPECT_DOUBLE_EQ(c.params.g10_tau, 15.0);
  EXPECT_DOUBLE_EQ(c.params.g20_tau, 15.0);
  EXPECT_DOUBLE_EQ(c.params.T_over_tau, 4.0 / 3.0);
  EXPECT_EQ(c.detuning_list, (std::vector<double>{0.0, 60.0}));
  const auto g = c.grid();
  EXPECT_DOUBLE_EQ(g.s_start, -3.0);
  EXPECT_DOUBLE_EQ(g.s_end, 3.0 + 4.0 / 3.0);
  EXPECT_EQ(g.steps, 12000);
}

TEST(ParseConfig, OverridesCommentsAndFractions) {
  const auto c = parse_config(
      "# sweep\n"
      "preset = fig2   # base\n"
      "\n"
      "mu = 1\n"
      "T_over_tau = 5/3\n"
      "delta_tau_list = 0, 60\n"
      "steps = 2000\n");
  EXPECT_EQ(c.params.mu, 1);
  EXPECT_DOUBLE_EQ(c.params.T_over_tau, 5.0 / 3.0);
  EXPECT_EQ(c.detuning_list.size(), 2u);
  EXPECT_EQ(c.steps, 2000);
}

TEST(ParseConfig, RejectsTooFewPhotons) {
  try {
    parse_config("n = 1\n");
    FAIL();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("line 1"), std::string::npos) << msg;
    EXPECT_NE(msg.find("n >= 2"), std::string::npos) << msg;
  }
}

TEST(ParseConfig, ErrorsCarryLineNumbers) {
  const auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("steps = 2000\nsteps = 3000\n").find("line 2: duplicate key"), std::string::npos);
  EXPECT_NE(message("preset = fig2\nwidth = 3\n").find("line 2: unknown key"), std::string::npos);
  EXPECT_NE(message("\nsteps = many\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("steps = 50\n").find("steps >= 100"), std::string::npos);
  EXPECT_NE(message("preset = fig9\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("just words\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("g10_tau = -1\n").find("positive"), std::string::npos);
  EXPECT_NE(message("delta_tau = 1\ndelta_tau_list = 1,2\n").find("mutually exclusive"), std::string::npos);
  EXPECT_NE(message("s_start = 5\ns_end = 1\n").find("s_start < s_end"), std::string::npos);
  EXPECT_NE(message("delta_tau_list = 0,,60\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("n = 2.5\n").find("integer"), std::string::npos);
}

TEST(ParseConfig, DefaultsToCustom) {
  const auto c = parse_config("");
  EXPECT_EQ(c.preset, Preset::custom);
  EXPECT_EQ(c.detuning_list, std::vector<double>{0.0});
}

TEST(BuildConfig, CommandLineOverrideReportsSource) {
  ConfigEntries entries = parse_entries("preset = fig2\n");
  entries["steps"] = {"10", 0};
  try {
    build_config(entries);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("command line"), std::string::npos);
  }
}

TEST(Run, Fig2WritesTrajectories) {
  auto c = parse_config("preset = fig2\nrecord_every = 50\n");
  c.output_dir = scratch("fig2");
  std::ostringstream log;
  ASSERT_EQ(run(c, log), 0);
  for (const auto* name : {"trajectory_0.csv", "trajectory_60.csv", "darkstate_0.csv", "darkstate_60.csv", "summary.txt"})
    EXPECT_TRUE(fs::exists(c.output_dir / name)) << name;

  const auto resonant = lines_of(slurp(c.output_dir / "trajectory_0.csv"));
  EXPECT_EQ(resonant.front(), "s,E,S_A,S_AB,S_An,S_ABn,Ic_AB,dark_overlap,pop_1,pop_6");
  EXPECT_EQ(resonant.size(), 1u + 12000 / 50 + 1);
  for (const auto* name : {"trajectory_0.csv", "trajectory_60.csv"}) {
    const auto rows = lines_of(slurp(c.output_dir / name));
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(std::stod(split(rows[i])[1]), -1e-9);
  }
  const auto last = split(resonant.back());
  ASSERT_EQ(last.size(), 10u);
  EXPECT_LE(std::stod(last[1]), 1e-3);
  EXPECT_GE(std::stod(last[9]), 0.99);

  const auto summary = slurp(c.output_dir / "summary.txt");
  EXPECT_NE(summary.find("[delta_tau=60]"), std::string::npos);
  EXPECT_NE(summary.find("min_E="), std::string::npos);
}

TEST(Run, Fig3DarkStateEndpoints) {
  auto c = parse_config("preset = fig3\nrecord_every = 100\n");
  c.output_dir = scratch("fig3");
  std::ostringstream log;
  ASSERT_EQ(run(c, log), 0);
  const auto rows = lines_of(slurp(c.output_dir / "darkstate_0.csv"));
  EXPECT_EQ(rows.front(), "s,alpha_over_P,beta_over_P,gamma_over_P,delta_over_P");
  const auto first = split(rows[1]);
  const auto last = split(rows.back());
  const double start[] = {1, 0, 0, 0};
  const double end[] = {0, 1, 0, 0};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(std::stod(first[k + 1]), start[k], 1e-3);
    EXPECT_NEAR(std::stod(last[k + 1]), end[k], 1e-3);
  }
}

TEST(Run, GhzReport) {
  auto c = parse_config("preset = ghz\n");
  c.output_dir = scratch("ghz");
  std::ostringstream log;
  ASSERT_EQ(run(c, log), 0);
  const auto report = slurp(c.output_dir / "ghz_report.txt");
  EXPECT_NE(report.find("S_ABC=1.0000\n"), std::string::npos) << report;
  EXPECT_NE(report.find("E=0.0000\n"), std::string::npos) << report;
  EXPECT_NE(report.find("supports_compatible=true"), std::string::npos) << report;
}

TEST(Run, ByteIdenticalOutput) {
  auto c = parse_config("preset = custom\ndelta_tau = 60\nsteps = 3000\nrecord_every = 7\n");
  c.output_dir = scratch("det_a");
  std::ostringstream log;
  ASSERT_EQ(run(c, log), 0);
  const auto first = slurp(c.output_dir / "trajectory_60.csv");
  c.output_dir = scratch("det_b");
  ASSERT_EQ(run(c, log), 0);
  EXPECT_EQ(first, slurp(c.output_dir / "trajectory_60.csv"));
  EXPECT_FALSE(first.empty());
}

TEST(Run, UnwritableOutputDirectory) {
  const auto blocker = scratch("blocker");
  std::ofstream(blocker.string()) << "not a directory";
  auto c = parse_config("preset = ghz\n");
  c.output_dir = blocker / "sub";
  std::ostringstream log;
  EXPECT_THROW(run(c, log), std::runtime_error);
  fs::remove(blocker);
}

TEST(Run, DetuningTags) {
  EXPECT_EQ(detuning_tag(0.0), "0");
  EXPECT_EQ(detuning_tag(60.0), "60");
  EXPECT_EQ(detuning_tag(-2.5), "-2.5");
}

}  // namespace
}  // namespace stirap::cli
