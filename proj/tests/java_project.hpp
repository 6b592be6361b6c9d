#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>

#include "simplikit/validator.hpp"
#include "support.hpp"

namespace simplikit::testing {

inline std::string java_toolchain() {
  const char* env = std::getenv("SIMPLIKIT_JAVA_TOOLCHAIN");
  return env && *env ? env : SIMPLIKIT_JAVA_TOOLCHAIN;
}

inline bool java_available() {
  return std::filesystem::exists(std::filesystem::path(java_toolchain()) / "jre/bin/java") ||
         std::system("command -v javac >/dev/null 2>&1") == 0;
}

inline ProjectConfig java_fixture_config(const std::string& fixture) {
  ProjectConfig c;
  c.root = fixture_path(fixture);
  const std::string prefix = "SIMPLIKIT_JAVA_TOOLCHAIN='" + java_toolchain() + "' ";
  c.build_command = prefix + "sh build.sh";
  c.test_command = prefix + "sh test.sh";
  c.timeout_seconds = 120;
  c.mode = ResultMode::ReportFiles;
  c.report_dir = "test-reports";
  return c;
}

inline ProjectConfig java_project_config() { return java_fixture_config("javaproj"); }

inline const char* kAuditFile = "src/main/java/demo/AuditService.java";

}  // namespace simplikit::testing
