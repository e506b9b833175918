#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "zeno/chain.hpp"
#include "zeno/scenario.hpp"

namespace zeno {

enum class GridSpacing { log, linear };

std::string to_string(GridSpacing spacing);

// Inter-measurement spacing sweep. taus() places both endpoints exactly and
// spaces the interior points uniformly in tau or ln tau.
struct GridSpec {
  double tau_min = 0.02;
  double tau_max = 3.0;
  int points = 150;
  GridSpacing spacing = GridSpacing::log;

  [[nodiscard]] std::vector<double> taus() const;
};

void validate(const GridSpec& grid);

// One survival curve request: protocol kind plus measurement count per tau.
struct ProtocolSpec {
  MeasurementKind kind = MeasurementKind::nonselective;
  std::uint64_t steps = 1;
};

enum class OutputFormat { csv, json };

std::string to_string(OutputFormat format);

struct OutputSpec {
  std::string path;  // empty: derived from the config file name by the CLI
  OutputFormat format = OutputFormat::csv;
};

// Complete description of one run. threads == 0 means use the hardware
// concurrency at execution time; the thread count never changes results.
struct RunConfig {
  Scenario scenario;
  GridSpec grid;
  std::vector<ProtocolSpec> protocols;
  int threads = 0;
  OutputSpec output;
};

// Parses the flat `key = value` format (dotted keys, '#' comments). Unknown,
// duplicate, malformed or out-of-range entries raise validation_error with
// the offending key and line number. Numbers must be finite; the sole
// exception is bath.beta of the Ohmic-bath models, where "inf" selects the
// zero-temperature mode.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

// The config fully resolved (defaults filled in), as ordered key/value pairs
// that parse back into a run producing byte-identical data files. Execution
// plumbing that does not define results (threads, output.path) is omitted.
std::vector<std::pair<std::string, std::string>> resolved_entries(const RunConfig& config);

}  // namespace zeno
