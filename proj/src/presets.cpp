#include "zeno/presets.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zeno/errors.hpp"

#ifndef ZENOSIM_DEFAULT_PRESET_DIR
#define ZENOSIM_DEFAULT_PRESET_DIR "presets"
#endif

namespace zeno {

namespace {

std::string read_description(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] != '#') return {};
    const auto text = line.find_first_not_of(" \t", start + 1);
    return text == std::string::npos ? std::string{} : line.substr(text);
  }
  return {};
}

}  // namespace

std::filesystem::path preset_directory() {
  if (const char* env = std::getenv("ZENOSIM_PRESET_DIR"); env != nullptr && *env != '\0')
    return env;
  return ZENOSIM_DEFAULT_PRESET_DIR;
}

std::vector<PresetInfo> list_presets() {
  const std::filesystem::path dir = preset_directory();
  std::vector<PresetInfo> out;
  if (!std::filesystem::is_directory(dir)) return out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".cfg") continue;
    out.push_back({entry.path().stem().string(), read_description(entry.path()), entry.path()});
  }
  std::sort(out.begin(), out.end(),
            [](const PresetInfo& a, const PresetInfo& b) { return a.id < b.id; });
  return out;
}

std::filesystem::path preset_path(const std::string& id) {
  const std::vector<PresetInfo> all = list_presets();
  for (const PresetInfo& preset : all) {
    if (preset.id == id) return preset.path;
  }
  std::ostringstream os;
  os << "unknown preset '" << id << "'";
  if (all.empty()) {
    os << " (no presets found under " << preset_directory().string() << ")";
  } else {
    os << "; available:";
    for (const PresetInfo& preset : all) os << ' ' << preset.id;
  }
  throw validation_error(os.str());
}

}  // namespace zeno
