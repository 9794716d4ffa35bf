#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "occ/params.hpp"

namespace occ {

struct LoadOptions {
  bool strict = true;  // reject unknown keys; lenient mode warns instead
};

struct LoadResult {
  Scenario scenario;
  std::vector<std::string> warnings;
};

// Every key is optional; omitted fields keep their defaults. Throws
// ValidationError on parse failure, unknown keys (strict mode) or any
// invariant violation.
LoadResult parse_config(const std::string& json_text, const LoadOptions& opts = {});
LoadResult load_config(const std::filesystem::path& path, const LoadOptions& opts = {});

nlohmann::json to_json(const Scenario& scenario);
std::string serialize(const Scenario& scenario);  // canonical, round-trips exactly

// FNV-1a 64-bit hash of the canonical serialization, as lowercase hex.
// Changes iff any parameter (or the seed) changes.
std::string fingerprint(const Scenario& scenario);

}  // namespace occ
