#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stirap/dynamics.hpp"
#include "stirap/model.hpp"

namespace stirap::cli {

enum class Preset { fig2, fig3, ghz, custom };

std::string_view to_string(Preset preset);

/// Parse or validation failure; the message carries the line number when
/// the offending value came from a config file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  Preset preset = Preset::custom;
  ModelParams params;
  std::optional<double> s_start;  // default -3
  std::optional<double> s_end;    // default T/tau + 3
  int steps = 12000;
  int record_every = 10;
  std::filesystem::path output_dir = "out";
  std::vector<double> detuning_list = {0.0};

  /// Grid for one run, resolving the default window from T/tau.
  TimeGrid grid() const;
};

/// One `key = value` assignment; line 0 marks a command-line override.
struct ConfigEntry {
  std::string value;
  int line = 0;
};
using ConfigEntries = std::map<std::string, ConfigEntry>;

/// Splits `key = value` lines, dropping blank lines and `#` comments.
/// Rejects unknown keys, duplicates and malformed lines.
ConfigEntries parse_entries(std::string_view text);

/// Applies the preset named by the `preset` entry (default custom), then
/// every other entry on top of it, validating as it goes.
ExperimentConfig build_config(const ConfigEntries& entries);

/// parse_entries followed by build_config.
ExperimentConfig parse_config(std::string_view text);

/// Text for --help describing every key and its default.
std::string config_reference();

}  // namespace stirap::cli
