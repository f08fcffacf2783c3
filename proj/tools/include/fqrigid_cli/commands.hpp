#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqrigid/limits.hpp"

namespace fqrigid::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       // guard exceeded or internal inconsistency
  kUsage = 2,         // malformed or invalid input
  kExceptional = 3,   // rigid-search found domains other than F_q[T]
  kEscaped = 4,       // Belyi composite branched outside the target pair
};

struct RunConfig {
  std::uint64_t guard = Limits{}.max_elements;
  unsigned workers = 1;
  bool json = false;
  std::uint64_t seed = 0;

  Limits limits() const { return Limits{guard}; }
};

struct CommandResult {
  int exit_code = kOk;
  Json report;        // always carries "schema": 1
  std::string error;  // set when the command failed before producing a report
};

CommandResult cmd_class_number(const std::vector<std::string>& curve_lines, const RunConfig& cfg);
CommandResult cmd_zeta(const std::vector<std::string>& curve_lines, const RunConfig& cfg);
CommandResult cmd_places(const std::string& curve_line, unsigned max_degree, const RunConfig& cfg);
CommandResult cmd_rigid_search(std::uint64_t q, unsigned genus_max, const RunConfig& cfg);
CommandResult cmd_subgroup(const std::vector<std::string>& frame_lines, unsigned torsion_bound,
                           const RunConfig& cfg);
CommandResult cmd_belyi(const std::string& map_spec, const std::string& targets, const RunConfig& cfg);
CommandResult cmd_oracle_clb(const std::string& curve_line, const std::string& place,
                             unsigned degree_bound, const RunConfig& cfg);

/// JSON (pretty, two-space indent) or a plain `key: value` listing.
std::string render(const CommandResult& r, bool json);

/// Non-blank, non-comment lines of a file.
std::vector<std::string> read_spec_lines(const std::string& path);

}  // namespace fqrigid::cli
