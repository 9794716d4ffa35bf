#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "occ/evaluate.hpp"

namespace occ {

// Shortest decimal representation that round-trips to the same double;
// locale-independent.
std::string format_double(double v);

// One file per sweep: per-series blocks of
//   # series: <name>
//   # <x_name>,<x_unit>,<y_name>,<y_unit>
//   x,y
// preceded by file-level comments naming the manifest and fingerprint.
// Written atomically (temp file + rename).
void write_sweep_csv(const SweepResult& result,
                     const std::filesystem::path& path,
                     const std::string& manifest_name);

struct RunManifest {
  std::string command_line;
  nlohmann::json config_snapshot;  // effective scenario, fully expanded
  std::uint64_t seed = 0;
  std::string tool_version;
  double duration_s = 0.0;  // wall clock; the only non-reproducible field
  std::vector<std::string> outputs;
  std::string fingerprint;
};

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path);

// Atomic text-file write used for all artifacts.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

}  // namespace occ
