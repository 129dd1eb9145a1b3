// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/manifest.hpp"

#include <cstdint>
#include <fstream>

#include <json.hpp>

#include "slitwave/errors.hpp"

namespace slitwave {

std::string RunManifest::make_run_id(
    const std::string& command,
    const std::map<std::string, std::string>& config_snapshot) {
  // FNV-1a over the command and the ordered snapshot.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  mix(command);
  for (const auto& [k, v] : config_snapshot) {
    mix(k);
    mix(v);
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

void RunManifest::write(const std::string& path) const {
  nlohmann::json j;
  j["run_id"] = run_id;
  j["tool"] = "slitwave";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config_snapshot;
  j["cache_entries_used"] = cache_entries_used;
  j["timings_seconds"] = timings_seconds;
  j["outputs"] = outputs;
  std::ofstream out(path);
  if (!out) throw Error("manifest not writable: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace slitwave
