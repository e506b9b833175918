#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeno/config.hpp"
#include "zeno/errors.hpp"
#include "zeno/output.hpp"
#include "zeno/presets.hpp"
#include "zeno/runner.hpp"

namespace {

using zeno::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

// --grid tau_min,tau_max,count[,spacing]; spacing defaults to the config's.
void apply_grid_override(RunConfig& config, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(trim(part));
  if (parts.size() != 3 && parts.size() != 4)
    throw zeno::validation_error("--grid expects tau_min,tau_max,count[,spacing]");
  const auto to_double = [](const std::string& s, const char* what) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v))
      throw zeno::validation_error(std::string("--grid ") + what + " must be a finite number");
    return v;
  };
  config.grid.tau_min = to_double(parts[0], "tau_min");
  config.grid.tau_max = to_double(parts[1], "tau_max");
  int count = 0;
  const auto [p, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
  if (ec != std::errc{} || p != parts[2].data() + parts[2].size())
    throw zeno::validation_error("--grid count must be an integer");
  config.grid.points = count;
  if (parts.size() == 4) {
    if (parts[3] == "log")
      config.grid.spacing = zeno::GridSpacing::log;
    else if (parts[3] == "linear")
      config.grid.spacing = zeno::GridSpacing::linear;
    else
      throw zeno::validation_error("--grid spacing must be log or linear");
  }
  validate(config.grid);
}

int env_threads() {
  const char* env = std::getenv("ZENOSIM_THREADS");
  if (env == nullptr || *env == '\0') return -1;
  int value = 0;
  const std::string text = env;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || p != text.data() + text.size() || value < 0 || value > 4096)
    throw zeno::validation_error("ZENOSIM_THREADS must be an integer in [0, 4096]");
  return value;
}

struct RunOptions {
  std::string preset;
  std::string config_path;
  std::string out_path;
  std::string format;
  std::string grid;
  int threads = -1;
};

int do_run(const RunOptions& options) {
  std::filesystem::path source;
  std::string stem;
  if (!options.preset.empty()) {
    source = zeno::preset_path(options.preset);
    stem = options.preset;
  } else {
    source = options.config_path;
    stem = source.stem().string();
  }
  RunConfig config = zeno::load_config(source);

  if (!options.grid.empty()) apply_grid_override(config, options.grid);
  if (const int env = env_threads(); env >= 0) config.threads = env;
  if (options.threads >= 0) config.threads = options.threads;
  if (!options.format.empty())
    config.output.format =
        options.format == "json" ? zeno::OutputFormat::json : zeno::OutputFormat::csv;

  std::filesystem::path out = options.out_path;
  if (out.empty()) {
    if (!config.output.path.empty())
      out = config.output.path;
    else
      out = stem + (config.output.format == zeno::OutputFormat::json ? ".json" : ".csv");
  }

  const zeno::SweepResult result = zeno::run_sweep(config);
  const auto written = zeno::write_run_files(config, result, out);

  std::cout << "model " << zeno::model_name(config.scenario) << ", " << result.taus.size()
            << " tau points, " << result.curves.size() << " curves\n";
  for (const zeno::SweepCurve& curve : result.curves) {
    std::cout << "  " << zeno::to_string(curve.protocol.kind) << ":" << curve.protocol.steps
              << "  segments " << curve.analysis.segments.size() << ", crossovers "
              << curve.analysis.crossovers.size() << ", peaks " << curve.analysis.peaks.size()
              << "\n";
  }
  for (const auto& path : written) std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

int do_presets() {
  const std::vector<zeno::PresetInfo> presets = zeno::list_presets();
  if (presets.empty()) {
    std::cout << "no presets found under " << zeno::preset_directory().string() << "\n";
    return kExitOk;
  }
  for (const zeno::PresetInfo& preset : presets) {
    std::cout << preset.id;
    if (!preset.description.empty()) std::cout << "  " << preset.description;
    std::cout << "\n";
    std::ifstream in(preset.path);
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      std::cout << "    " << line << "\n";
    }
  }
  return kExitOk;
}

int do_validate(const std::string& path) {
  nlohmann::ordered_json report;
  try {
    const RunConfig config = zeno::load_config(path);
    report["status"] = "ok";
    report["model"] = zeno::model_name(config.scenario);
    report["points"] = config.grid.points;
    report["protocols"] = config.protocols.size();
    report["format"] = zeno::to_string(config.output.format);
    std::cout << report.dump() << "\n";
    return kExitOk;
  } catch (const zeno::validation_error& e) {
    report["status"] = "error";
    report["message"] = e.what();
    std::cout << report.dump() << "\n";
    return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Survival probabilities and effective decay rates under repeated measurements"};
  app.require_subcommand(1);

  RunOptions options;
  CLI::App* run = app.add_subcommand("run", "Evaluate a sweep and write data files");
  CLI::Option* preset_opt = run->add_option("--preset", options.preset, "Preset id");
  CLI::Option* config_opt = run->add_option("--config", options.config_path, "Config file path");
  preset_opt->excludes(config_opt);
  config_opt->excludes(preset_opt);
  run->add_option("--out", options.out_path, "Output file path");
  run->add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--grid", options.grid, "Override grid: tau_min,tau_max,count[,spacing]");
  run->add_option("--threads", options.threads, "Worker threads (0 = hardware)")
      ->check(CLI::Range(0, 4096));

  CLI::App* presets = app.add_subcommand("presets", "List available presets");

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "Check a config file");
  validate->add_option("path", validate_path, "Config file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (run->parsed()) {
      if (options.preset.empty() && options.config_path.empty()) {
        std::cerr << "error: run needs --preset or --config\n";
        return kExitValidation;
      }
      return do_run(options);
    }
    if (presets->parsed()) return do_presets();
    if (validate->parsed()) return do_validate(validate_path);
    std::cerr << "error: no subcommand\n";
    return kExitValidation;
  } catch (const zeno::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const zeno::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitUnexpected;
  }
}
