#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace zeno {

struct PresetInfo {
  std::string id;           // file stem, e.g. "fig1a"
  std::string description;  // leading comment line of the file, if any
  std::filesystem::path path;
};

// Preset search directory: ZENOSIM_PRESET_DIR if set, else the directory
// baked in at build time, else ./presets.
std::filesystem::path preset_directory();

// All *.cfg files in the preset directory, sorted by id.
std::vector<PresetInfo> list_presets();

// Path of one preset; unknown ids raise validation_error listing what exists.
std::filesystem::path preset_path(const std::string& id);

}  // namespace zeno
