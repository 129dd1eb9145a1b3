// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_MANIFEST_HPP
#define SLITWAVE_MANIFEST_HPP

#include <map>
#include <string>
#include <vector>

namespace slitwave {

inline constexpr const char* kToolVersion = "0.1.0";

// Provenance record written next to every file-producing run.  The run id
// is a deterministic hash of the command and the config snapshot, so
// re-running a manifest's config reproduces the output files byte for
// byte (FEM timing fields aside).
struct RunManifest {
  std::string run_id;
  std::string command;
  std::map<std::string, std::string> config_snapshot;
  std::vector<std::string> cache_entries_used;  // cache records consumed
  std::map<std::string, double> timings_seconds;
  std::vector<std::string> outputs;

  static std::string make_run_id(const std::string& command,
                                 const std::map<std::string, std::string>&
                                     config_snapshot);

  void write(const std::string& path) const;
};

}  // namespace slitwave

#endif  // SLITWAVE_MANIFEST_HPP
