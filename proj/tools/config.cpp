#include "config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace stirap::cli {

namespace {

constexpr std::array<std::string_view, 13> kKeys = {
    "preset", "n",        "mu",    "g10_tau",      "g20_tau",   "T_over_tau",     "delta_tau",
    "delta_tau_list", "s_start", "s_end", "steps", "record_every", "output_dir"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string where(const ConfigEntry& e) {
  return e.line > 0 ? "line " + std::to_string(e.line) : std::string("command line");
}

[[noreturn]] void fail(const ConfigEntry& e, std::string_view key, const std::string& what) {
  throw ConfigError(where(e) + ": " + std::string(key) + " = " + e.value + ": " + what);
}

int to_int(std::string_view key, const ConfigEntry& e) {
  const std::string_view v = trim(e.value);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) fail(e, key, "expected an integer");
  return out;
}

// Accepts plain decimals and simple fractions such as 4/3.
std::optional<double> to_double(std::string_view v) {
  v = trim(v);
  if (v.empty()) return std::nullopt;
  const auto slash = v.find('/');
  if (slash != std::string_view::npos) {
    const auto num = to_double(v.substr(0, slash));
    const auto den = to_double(v.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
  }
  if (v.front() == '+') v.remove_prefix(1);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) return std::nullopt;
  return out;
}

double to_double(std::string_view key, const ConfigEntry& e) {
  const auto out = to_double(e.value);
  if (!out) fail(e, key, "expected a finite number");
  return *out;
}

std::vector<double> to_double_list(std::string_view key, const ConfigEntry& e) {
  std::vector<double> out;
  std::string_view rest = e.value;
  while (true) {
    const auto comma = rest.find(',');
    const auto item = to_double(rest.substr(0, comma));
    if (!item) fail(e, key, "expected a comma-separated list of numbers");
    out.push_back(*item);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

Preset to_preset(const ConfigEntry& e) {
  const auto v = trim(e.value);
  if (v == "fig2") return Preset::fig2;
  if (v == "fig3") return Preset::fig3;
  if (v == "ghz") return Preset::ghz;
  if (v == "custom") return Preset::custom;
  fail(e, "preset", "expected one of fig2, fig3, ghz, custom");
}

ExperimentConfig preset_defaults(Preset preset) {
  ExperimentConfig c;
  c.preset = preset;
  // Every preset shares the figure parameters n=2, mu=0, g10 tau = g20 tau = 15, T = 4 tau/3.
  c.params = ModelParams{2, 0, 15.0, 15.0, 4.0 / 3.0, 0.0};
  c.detuning_list = preset == Preset::fig2 ? std::vector<double>{0.0, 60.0} : std::vector<double>{0.0};
  return c;
}

}  // namespace

std::string_view to_string(Preset preset) {
  switch (preset) {
    case Preset::fig2: return "fig2";
    case Preset::fig3: return "fig3";
    case Preset::ghz: return "ghz";
    case Preset::custom: return "custom";
  }
  return "?";
}

TimeGrid ExperimentConfig::grid() const {
  TimeGrid g = TimeGrid::default_for(params, steps, record_every);
  if (s_start) g.s_start = *s_start;
  if (s_end) g.s_end = *s_end;
  return g;
}

ConfigEntries parse_entries(std::string_view text) {
  ConfigEntries entries;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected `key = value`");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": missing key");
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key `" + key + "`");
    if (value.empty()) throw ConfigError("line " + std::to_string(line_no) + ": missing value for " + key);
    const auto [it, inserted] = entries.emplace(key, ConfigEntry{value, line_no});
    if (!inserted)
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key `" + key + "` (first set on line " +
                        std::to_string(it->second.line) + ")");
  }
  return entries;
}

ExperimentConfig build_config(const ConfigEntries& entries) {
  for (const auto& [key, entry] : entries)
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw ConfigError(where(entry) + ": unknown key `" + key + "`");

  const auto preset_it = entries.find("preset");
  ExperimentConfig c = preset_defaults(preset_it == entries.end() ? Preset::custom : to_preset(preset_it->second));

  if (entries.count("delta_tau") && entries.count("delta_tau_list"))
    throw ConfigError(where(entries.at("delta_tau")) + ": delta_tau and delta_tau_list are mutually exclusive");

  for (const auto& [key, e] : entries) {
    if (key == "preset") continue;
    if (key == "n") {
      c.params.n = to_int(key, e);
      if (c.params.n < 2) fail(e, key, "n >= 2 required");
    } else if (key == "mu") {
      c.params.mu = to_int(key, e);
      if (c.params.mu < 0) fail(e, key, "mu >= 0 required");
    } else if (key == "g10_tau") {
      c.params.g10_tau = to_double(key, e);
      if (c.params.g10_tau <= 0.0) fail(e, key, "must be positive");
    } else if (key == "g20_tau") {
      c.params.g20_tau = to_double(key, e);
      if (c.params.g20_tau <= 0.0) fail(e, key, "must be positive");
    } else if (key == "T_over_tau") {
      c.params.T_over_tau = to_double(key, e);
    } else if (key == "delta_tau") {
      c.detuning_list = {to_double(key, e)};
    } else if (key == "delta_tau_list") {
      c.detuning_list = to_double_list(key, e);
    } else if (key == "s_start") {
      c.s_start = to_double(key, e);
    } else if (key == "s_end") {
      c.s_end = to_double(key, e);
    } else if (key == "steps") {
      c.steps = to_int(key, e);
      if (c.steps < 100) fail(e, key, "steps >= 100 required");
    } else if (key == "record_every") {
      c.record_every = to_int(key, e);
      if (c.record_every < 1) fail(e, key, "record_every >= 1 required");
    } else if (key == "output_dir") {
      c.output_dir = e.value;
    }
  }

  try {
    c.params.validate();
    c.grid().validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(std::string("invalid configuration: ") + err.what());
  }
  return c;
}

ExperimentConfig parse_config(std::string_view text) { return build_config(parse_entries(text)); }

std::string config_reference() {
  std::ostringstream out;
  out << "Config file: one `key = value` per line, `#` starts a comment.\n"
         "Keys (defaults in brackets):\n"
         "  preset          fig2 | fig3 | ghz | custom [custom]\n"
         "                  fig2: delta_tau_list = 0, 60; others: delta_tau_list = 0\n"
         "  n               photons in mode a, >= 2 [2]\n"
         "  mu              photons in mode b, >= 0 [0]\n"
         "  g10_tau         peak mode-a coupling times tau [15]\n"
         "  g20_tau         peak mode-b coupling times tau [15]\n"
         "  T_over_tau      pulse separation in units of tau, fractions allowed [4/3]\n"
         "  delta_tau       single detuning (excludes delta_tau_list)\n"
         "  delta_tau_list  comma-separated detunings, one run each\n"
         "  s_start, s_end  integration window in units of tau [-3, T_over_tau + 3]\n"
         "  steps           RK4 steps per run, >= 100 [12000]\n"
         "  record_every    record a frame every k steps [10]\n"
         "  output_dir      directory for CSV and summary files [out]\n";
  return out.str();
}

}  // namespace stirap::cli
