#include "zeno/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "zeno/errors.hpp"
#include "zeno/output.hpp"

namespace zeno {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

[[noreturn]] void fail_line(int line, const std::string& message) {
  std::ostringstream os;
  os << "config line " << line << ": " << message;
  throw validation_error(os.str());
}

std::string trim(std::string s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.erase(s.begin());
  while (!s.empty() && is_space(s.back())) s.pop_back();
  return s;
}

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

class Reader {
 public:
  explicit Reader(std::istream& in) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) fail_line(line_no, "expected `key = value`");
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key.empty()) fail_line(line_no, "missing key before '='");
      if (value.empty()) fail_line(line_no, "missing value for key '" + key + "'");
      const auto [it, inserted] = entries_.emplace(key, Entry{value, line_no});
      if (!inserted) {
        std::ostringstream os;
        os << "duplicate key '" << key << "' (first set on line " << it->second.line << ")";
        fail_line(line_no, os.str());
      }
    }
  }

  [[nodiscard]] bool has(const std::string& key) const { return entries_.contains(key); }

  std::string require_string(const std::string& key) {
    Entry& e = at(key);
    return e.value;
  }

  double require_double(const std::string& key, bool allow_infinite = false) {
    Entry& e = at(key);
    return to_double(key, e, allow_infinite);
  }

  double optional_double(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    return require_double(key);
  }

  std::int64_t require_int(const std::string& key) {
    Entry& e = at(key);
    std::int64_t value = 0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      fail_line(e.line, "key '" + key + "' needs an integer, got '" + e.value + "'");
    return value;
  }

  std::int64_t optional_int(const std::string& key, std::int64_t fallback) {
    if (!has(key)) return fallback;
    return require_int(key);
  }

  std::vector<double> require_list(const std::string& key) {
    Entry& e = at(key);
    std::vector<double> out;
    std::stringstream items(e.value);
    std::string item;
    while (std::getline(items, item, ',')) {
      Entry piece{trim(item), e.line};
      if (piece.value.empty()) fail_line(e.line, "key '" + key + "' holds an empty list entry");
      out.push_back(to_double(key, piece, false));
    }
    if (out.empty()) fail_line(e.line, "key '" + key + "' needs at least one number");
    return out;
  }

  [[nodiscard]] int line_of(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

  // Every key must have been consumed by now; the lowest-line leftover is
  // reported so the user fixes mistakes in file order.
  void finish() const {
    const Entry* worst = nullptr;
    std::string key;
    for (const auto& [k, e] : entries_) {
      if (e.used) continue;
      if (worst == nullptr || e.line < worst->line) {
        worst = &e;
        key = k;
      }
    }
    if (worst != nullptr) fail_line(worst->line, "unknown key '" + key + "'");
  }

 private:
  Entry& at(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end())
      throw validation_error("config: missing required key '" + key + "'");
    it->second.used = true;
    return it->second;
  }

  static double to_double(const std::string& key, const Entry& e, bool allow_infinite) {
    double value = 0.0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      fail_line(e.line, "key '" + key + "' needs a number, got '" + e.value + "'");
    if (std::isnan(value)) fail_line(e.line, "key '" + key + "' must not be NaN");
    if (std::isinf(value) && !(allow_infinite && value > 0.0))
      fail_line(e.line, "key '" + key + "' must be finite");
    return value;
  }

  std::map<std::string, Entry> entries_;
};

std::vector<ProtocolSpec> parse_protocols(const std::string& text, int line) {
  std::vector<ProtocolSpec> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    item = trim(item);
    if (item.empty()) fail_line(line, "protocols list holds an empty entry");
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      fail_line(line, "protocol '" + item + "' must look like kind:steps");
    const std::string kind = trim(item.substr(0, colon));
    const std::string steps_text = trim(item.substr(colon + 1));
    ProtocolSpec spec;
    if (kind == "selective")
      spec.kind = MeasurementKind::selective;
    else if (kind == "nonselective")
      spec.kind = MeasurementKind::nonselective;
    else
      fail_line(line, "protocol kind '" + kind + "' must be selective or nonselective");
    std::uint64_t steps = 0;
    const char* first = steps_text.data();
    const char* last = first + steps_text.size();
    const auto [ptr, ec] = std::from_chars(first, last, steps);
    if (ec != std::errc{} || ptr != last || steps == 0)
      fail_line(line, "protocol steps '" + steps_text + "' must be a positive integer");
    spec.steps = steps;
    out.push_back(spec);
  }
  if (out.empty()) fail_line(line, "protocols must list at least one protocol");
  return out;
}

OhmicBath read_bath(Reader& reader) {
  OhmicBath bath;
  bath.coupling = reader.require_double("bath.coupling");
  bath.cutoff = reader.require_double("bath.cutoff");
  bath.inverse_temperature = reader.require_double("bath.beta", /*allow_infinite=*/true);
  return bath;
}

Scenario read_scenario(Reader& reader, const std::string& model) {
  if (model == "single_spin") {
    SingleSpinModel m;
    m.polar_angle = reader.require_double("spin.theta");
    if (!(m.polar_angle >= 0.0 && m.polar_angle <= kPi))
      fail_line(reader.line_of("spin.theta"), "spin.theta must lie in [0, pi]");
    m.azimuth_angle = reader.optional_double("spin.phi", 0.0);
    if (!(m.azimuth_angle >= 0.0 && m.azimuth_angle < 2.0 * kPi))
      fail_line(reader.line_of("spin.phi"), "spin.phi must lie in [0, 2 pi)");
    m.level_splitting = reader.optional_double("spin.omega0", 1.0);
    m.bath = read_bath(reader);
    return m;
  }
  if (model == "large_spin") {
    LargeSpinModel m;
    m.spin_magnitude = reader.optional_double("spin.magnitude", 1.0);
    if (m.spin_magnitude != 1.0)
      fail_line(reader.line_of("spin.magnitude"), "spin.magnitude must be 1");
    m.level_splitting = reader.optional_double("spin.omega0", 1.0);
    m.bath = read_bath(reader);
    return m;
  }
  if (model == "spin_bath") {
    SpinBathModel m;
    m.bias = reader.require_double("system.bias");
    m.tunneling = reader.require_double("system.tunneling");
    m.inverse_temperature = reader.require_double("bath.beta");
    const std::int64_t size = reader.require_int("bath.size");
    if (size < 1 || size > 100000)
      fail_line(reader.line_of("bath.size"), "bath.size must lie in [1, 100000]");
    m.bath_size = static_cast<int>(size);
    if (reader.has("bath.levels")) {
      if (reader.has("bath.level"))
        fail_line(reader.line_of("bath.level"), "give bath.level or bath.levels, not both");
      m.bath_levels = reader.require_list("bath.levels");
    } else {
      m.bath_levels = {reader.require_double("bath.level")};
    }
    if (reader.has("bath.couplings")) {
      if (reader.has("bath.coupling"))
        fail_line(reader.line_of("bath.coupling"),
                  "give bath.coupling or bath.couplings, not both");
      m.bath_couplings = reader.require_list("bath.couplings");
    } else {
      m.bath_couplings = {reader.require_double("bath.coupling")};
    }
    return m;
  }
  throw validation_error("config: unknown model '" + model +
                         "' (expected single_spin, spin_bath or large_spin)");
}

}  // namespace

std::string to_string(GridSpacing spacing) {
  return spacing == GridSpacing::log ? "log" : "linear";
}

std::string to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "json";
}

void validate(const GridSpec& grid) {
  if (!(grid.tau_min > 0.0) || !std::isfinite(grid.tau_min))
    throw validation_error("grid.tau_min must be positive and finite");
  if (!(grid.tau_max > grid.tau_min) || !std::isfinite(grid.tau_max))
    throw validation_error("grid.tau_max must be finite and above grid.tau_min");
  if (grid.points < 2) throw validation_error("grid.points must be at least 2");
  if (grid.points > 1000000) throw capacity_error("grid.points above the 1000000 cap");
}

std::vector<double> GridSpec::taus() const {
  validate(*this);
  std::vector<double> out(static_cast<std::size_t>(points));
  const double denom = static_cast<double>(points - 1);
  if (spacing == GridSpacing::log) {
    const double a = std::log(tau_min);
    const double b = std::log(tau_max);
    for (int i = 0; i < points; ++i)
      out[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * static_cast<double>(i) / denom);
  } else {
    for (int i = 0; i < points; ++i)
      out[static_cast<std::size_t>(i)] =
          tau_min + (tau_max - tau_min) * static_cast<double>(i) / denom;
  }
  out.front() = tau_min;
  out.back() = tau_max;
  return out;
}

RunConfig parse_config(std::istream& in) {
  Reader reader(in);
  RunConfig config;
  const std::string model = reader.require_string("model");
  config.scenario = read_scenario(reader, model);

  config.grid.tau_min = reader.require_double("grid.tau_min");
  config.grid.tau_max = reader.require_double("grid.tau_max");
  const std::int64_t points = reader.require_int("grid.points");
  if (points < 2 || points > 1000000)
    fail_line(reader.line_of("grid.points"), "grid.points must lie in [2, 1000000]");
  config.grid.points = static_cast<int>(points);
  if (reader.has("grid.spacing")) {
    const std::string spacing = reader.require_string("grid.spacing");
    if (spacing == "log")
      config.grid.spacing = GridSpacing::log;
    else if (spacing == "linear")
      config.grid.spacing = GridSpacing::linear;
    else
      fail_line(reader.line_of("grid.spacing"), "grid.spacing must be log or linear");
  }

  config.protocols =
      parse_protocols(reader.require_string("protocols"), reader.line_of("protocols"));

  const std::int64_t threads = reader.optional_int("threads", 0);
  if (threads < 0 || threads > 4096)
    fail_line(reader.line_of("threads"), "threads must lie in [0, 4096]");
  config.threads = static_cast<int>(threads);

  if (reader.has("output.path")) config.output.path = reader.require_string("output.path");
  if (reader.has("output.format")) {
    const std::string format = reader.require_string("output.format");
    if (format == "csv")
      config.output.format = OutputFormat::csv;
    else if (format == "json")
      config.output.format = OutputFormat::json;
    else
      fail_line(reader.line_of("output.format"), "output.format must be csv or json");
  }

  reader.finish();

  try {
    validate(config.scenario);
    validate(config.grid);
  } catch (const capacity_error& e) {
    throw capacity_error(std::string("config: ") + e.what());
  } catch (const validation_error& e) {
    throw validation_error(std::string("config: ") + e.what());
  }
  return config;
}

RunConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open config file '" + path.string() + "'");
  try {
    return parse_config(in);
  } catch (const capacity_error& e) {
    throw capacity_error(path.string() + ": " + e.what());
  } catch (const validation_error& e) {
    throw validation_error(path.string() + ": " + e.what());
  }
}

std::vector<std::pair<std::string, std::string>> resolved_entries(const RunConfig& config) {
  std::vector<std::pair<std::string, std::string>> out;
  const auto put = [&](const std::string& key, const std::string& value) {
    out.emplace_back(key, value);
  };
  const auto put_double = [&](const std::string& key, double value) {
    put(key, std::isinf(value) ? "inf" : format_double(value));
  };
  const auto put_list = [&](const std::string& key, const std::vector<double>& values) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) joined += ",";
      joined += format_double(values[i]);
    }
    put(key, joined);
  };

  put("model", model_name(config.scenario));
  if (const auto* m = std::get_if<SingleSpinModel>(&config.scenario)) {
    put_double("spin.theta", m->polar_angle);
    put_double("spin.phi", m->azimuth_angle);
    put_double("spin.omega0", m->level_splitting);
    put_double("bath.coupling", m->bath.coupling);
    put_double("bath.cutoff", m->bath.cutoff);
    put_double("bath.beta", m->bath.inverse_temperature);
  } else if (const auto* m = std::get_if<SpinBathModel>(&config.scenario)) {
    put_double("system.bias", m->bias);
    put_double("system.tunneling", m->tunneling);
    put("bath.size", std::to_string(m->bath_size));
    if (m->bath_levels.size() > 1)
      put_list("bath.levels", m->bath_levels);
    else
      put_double("bath.level", m->bath_levels.front());
    if (m->bath_couplings.size() > 1)
      put_list("bath.couplings", m->bath_couplings);
    else
      put_double("bath.coupling", m->bath_couplings.front());
    put_double("bath.beta", m->inverse_temperature);
  } else if (const auto* m = std::get_if<LargeSpinModel>(&config.scenario)) {
    put_double("spin.magnitude", m->spin_magnitude);
    put_double("spin.omega0", m->level_splitting);
    put_double("bath.coupling", m->bath.coupling);
    put_double("bath.cutoff", m->bath.cutoff);
    put_double("bath.beta", m->bath.inverse_temperature);
  }

  put_double("grid.tau_min", config.grid.tau_min);
  put_double("grid.tau_max", config.grid.tau_max);
  put("grid.points", std::to_string(config.grid.points));
  put("grid.spacing", to_string(config.grid.spacing));

  std::string protocols;
  for (std::size_t i = 0; i < config.protocols.size(); ++i) {
    if (i > 0) protocols += ",";
    protocols += to_string(config.protocols[i].kind) + ":" +
                 std::to_string(config.protocols[i].steps);
  }
  put("protocols", protocols);
  put("output.format", to_string(config.output.format));
  return out;
}

}  // namespace zeno
