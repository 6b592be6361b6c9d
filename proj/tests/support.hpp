#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace simplikit::testing {

inline std::filesystem::path fixture_path(const std::string& relative) {
  return std::filesystem::path(SIMPLIKIT_FIXTURE_DIR) / relative;
}

inline std::string read_fixture(const std::string& relative) {
  std::ifstream in(fixture_path(relative), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + relative);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace simplikit::testing
