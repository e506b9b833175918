#include "zeno/output.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_block(const RunConfig& config) {
  ordered_json block = ordered_json::object();
  for (const auto& [key, value] : resolved_entries(config)) block[key] = value;
  return block;
}

ordered_json analysis_block(const CurveAnalysis& analysis) {
  ordered_json segments = ordered_json::array();
  for (const RegimeSegment& s : analysis.segments) {
    segments.push_back({{"tau_begin", s.tau_begin},
                        {"tau_end", s.tau_end},
                        {"regime", to_string(s.regime)}});
  }
  ordered_json crossovers = ordered_json::array();
  for (double c : analysis.crossovers) crossovers.push_back(c);
  ordered_json peaks = ordered_json::array();
  for (const RatePeak& p : analysis.peaks)
    peaks.push_back({{"tau", p.tau}, {"rate", p.rate}});
  return {{"segments", std::move(segments)},
          {"crossovers", std::move(crossovers)},
          {"peaks", std::move(peaks)}};
}

std::string protocol_label(const ProtocolSpec& protocol) {
  return to_string(protocol.kind) + ":" + std::to_string(protocol.steps);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot open output file '" + path.string() + "'");
  out << text;
  out.flush();
  if (!out) throw validation_error("failed writing output file '" + path.string() + "'");
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (result.ec != std::errc{}) throw numerical_error("number formatting failed");
  return std::string(buffer, result.ptr);
}

void write_csv(std::ostream& out, const RunConfig& config, const SweepResult& result) {
  const std::string model = model_name(config.scenario);
  out << "model,kind,M,tau,survival,gamma_rate\n";
  for (const SweepCurve& curve : result.curves) {
    const std::string kind = to_string(curve.protocol.kind);
    const std::string steps = std::to_string(curve.protocol.steps);
    for (std::size_t i = 0; i < result.taus.size(); ++i) {
      out << model << ',' << kind << ',' << steps << ',' << format_double(result.taus[i])
          << ',' << format_double(curve.survival[i]) << ',' << format_double(curve.rate[i])
          << '\n';
    }
  }
}

std::string metadata_json(const RunConfig& config, const SweepResult& result) {
  ordered_json doc;
  doc["config"] = config_block(config);
  ordered_json curves = ordered_json::array();
  for (const SweepCurve& curve : result.curves) {
    ordered_json entry;
    entry["protocol"] = protocol_label(curve.protocol);
    ordered_json analysis = analysis_block(curve.analysis);
    for (auto& [key, value] : analysis.items()) entry[key] = std::move(value);
    curves.push_back(std::move(entry));
  }
  doc["curves"] = std::move(curves);
  return doc.dump(2) + "\n";
}

std::string result_json(const RunConfig& config, const SweepResult& result) {
  ordered_json doc;
  doc["config"] = config_block(config);
  doc["taus"] = result.taus;
  ordered_json curves = ordered_json::array();
  for (const SweepCurve& curve : result.curves) {
    ordered_json entry;
    entry["protocol"] = protocol_label(curve.protocol);
    entry["survival"] = curve.survival;
    entry["rate"] = curve.rate;
    entry["analysis"] = analysis_block(curve.analysis);
    curves.push_back(std::move(entry));
  }
  doc["curves"] = std::move(curves);
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_run_files(const RunConfig& config,
                                                   const SweepResult& result,
                                                   const std::filesystem::path& path) {
  std::vector<std::filesystem::path> written;
  if (config.output.format == OutputFormat::json) {
    write_text_file(path, result_json(config, result));
    written.push_back(path);
    return written;
  }
  std::ostringstream csv;
  write_csv(csv, config, result);
  write_text_file(path, csv.str());
  written.push_back(path);
  std::filesystem::path sidecar = path;
  sidecar += ".meta.json";
  write_text_file(sidecar, metadata_json(config, result));
  written.push_back(sidecar);
  return written;
}

}  // namespace zeno
