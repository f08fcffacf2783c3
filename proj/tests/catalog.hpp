#pragma once

#include <string>
#include <vector>

#include "fqrigid/text_format.hpp"
#include "fqrigid_cli/commands.hpp"

inline std::vector<fqrigid::CurveModel> load_catalog(const std::string& name = "catalog.txt") {
  std::vector<fqrigid::CurveModel> out;
  for (const auto& line : fqrigid::cli::read_spec_lines(std::string(FQRIGID_TEST_DATA_DIR) + "/" + name))
    out.push_back(fqrigid::parse_curve(line));
  return out;
}
