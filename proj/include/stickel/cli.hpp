#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace stickel::cli {

struct Command {
  std::string subcommand;  // group theta ag sg bound compare-long verify ingest
  std::string group_spec;
  std::string kappa_spec = "full";
  std::string format = "json";
  std::optional<std::string> table_path;
  std::optional<std::string> output_path;
  std::string char_spec = "regular";  // regular | trivial | irr:i | coeffs:a,b,...
  std::uint64_t seed = 20240611;
  std::size_t samples = 200;
};

struct RunResult {
  int exit_code = 0;
  nlohmann::json report;
  std::string text;  // rendered in the requested format
};

/// Exit 0 on success, 1 on validation failure, 2 on usage errors. Failures
/// carry {"error": {"code": ..., "message": ...}}.
RunResult run(const Command& cmd);

}  // namespace stickel::cli
