#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "zeno/config.hpp"
#include "zeno/runner.hpp"

namespace zeno {

// Shortest representation that parses back to the identical double; the
// serialization contract for every numeric field written to disk.
std::string format_double(double value);

// Rows `model,kind,M,tau,survival,gamma_rate`, one per curve per tau, curves
// in protocol order, LF line endings.
void write_csv(std::ostream& out, const RunConfig& config, const SweepResult& result);

// Sidecar document: the resolved config (re-feedable) plus per-curve regime
// segments, crossovers and peaks.
std::string metadata_json(const RunConfig& config, const SweepResult& result);

// Self-contained single-document alternative to CSV + sidecar: resolved
// config, tau grid, per-curve data and analysis.
std::string result_json(const RunConfig& config, const SweepResult& result);

// Writes the file(s) for the configured format: `path` plus `path`.meta.json
// for CSV, just `path` for JSON. Returns the paths written.
std::vector<std::filesystem::path> write_run_files(const RunConfig& config,
                                                   const SweepResult& result,
                                                   const std::filesystem::path& path);

}  // namespace zeno
