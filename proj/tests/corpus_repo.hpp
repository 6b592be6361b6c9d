#pragma once

#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "support.hpp"

namespace simplikit::testing {

// Builds the 12-commit fixture repository under `dest`.
inline std::filesystem::path make_corpus_repo(const std::filesystem::path& dest) {
  const std::string cmd = "sh '" + fixture_path("corpus_repo/make_repo.sh").string() + "' '" + dest.string() + "'";
  if (std::system(cmd.c_str()) != 0) throw std::runtime_error("fixture repo script failed");
  return dest;
}

}  // namespace simplikit::testing
