#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simplikit/metrics.hpp"
#include "simplikit/reducer.hpp"
#include "simplikit/source_file.hpp"
#include "simplikit/syntax.hpp"

namespace simplikit {

namespace fs = std::filesystem;

enum class ResultMode { ExitCode, ReportFiles };

struct ProjectConfig {
  fs::path root;
  std::string build_command;
  std::string test_command;
  double timeout_seconds = 300;
  ResultMode mode = ResultMode::ExitCode;
  /// Directory, relative to the workspace, holding JUnit-style XML reports.
  fs::path report_dir = "test-reports";
  /// Test command runs per candidate; every run must pass.
  int reruns = 1;
  std::size_t workers = 1;
  /// Where workspaces are created; the system temp dir when empty.
  fs::path workspace_dir;
  bool keep_workspaces = false;

  /// Throws ConfigError when an invariant is violated.
  void check() const;
};

/// Reads the [project] table of a TOML/JSON document. Relative paths resolve
/// against `base`.
ProjectConfig project_config_from_json(const nlohmann::json& doc, const fs::path& base);
ProjectConfig load_project_config(const fs::path& path);

struct TestCase {
  std::string id;
  std::string status;  // passed, failed, errored, skipped
};

struct TestOutcome {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int errored = 0;
  int skipped = 0;
  std::vector<TestCase> tests;

  bool all_passed() const noexcept { return failed == 0 && errored == 0 && total > 0; }
};

/// Parses JUnit-style XML (testsuite or testsuites root).
TestOutcome parse_junit_xml(const std::string& xml);

enum class Verdict { Accepted, Rejected };
enum class Reason { None, CompileFailure, TestFailure, NotSmaller, Unaltered, Timeout };
std::string_view to_string(Verdict v);
std::string_view to_string(Reason r);

struct ValidationReport {
  std::string candidate_id;
  bool compiled = false;
  TestOutcome outcome;
  MetricPair sloc;
  MetricPair tokens;
  std::optional<MetricsDelta> metrics;
  Verdict verdict = Verdict::Rejected;
  Reason reason = Reason::None;
  std::string log;
};

nlohmann::json to_json(const ValidationReport& report);

/// An isolated copy of the project with one method replaced. Removed on
/// destruction unless kept.
class Workspace {
 public:
  Workspace(fs::path root, fs::path file, bool keep) : root_(std::move(root)), file_(std::move(file)), keep_(keep) {}
  Workspace(Workspace&& other) noexcept;
  Workspace& operator=(Workspace&&) = delete;
  Workspace(const Workspace&) = delete;
  ~Workspace();

  const fs::path& root() const noexcept { return root_; }
  /// The spliced file inside the workspace.
  const fs::path& file() const noexcept { return file_; }

 private:
  fs::path root_;
  fs::path file_;
  bool keep_;
};

/// Copies the project and replaces `method_span` of `file` with
/// `candidate_text`. The span must be exactly one method of the file.
/// Throws ValidationError("span-mismatch" | "io-failure").
Workspace splice(const ProjectConfig& config, const fs::path& file, Span method_span, std::string_view candidate_text);

/// Unmodified copy of the project.
Workspace copy_project(const ProjectConfig& config);

struct EquivalenceResult {
  bool compiled = false;
  bool timed_out = false;
  TestOutcome outcome;
  std::string log;
};

EquivalenceResult check_equivalence(const Workspace& workspace, const ProjectConfig& config);

/// The method under simplification and where it lives.
struct MethodContext {
  fs::path file;  // relative to the project root, or absolute
  Span span;
  MethodUnit original;
};

/// Locates `qualified_name` (or the only method named so) in `file`.
MethodContext method_context(const ProjectConfig& config, const fs::path& file, std::string_view method);

ValidationReport validate_candidate(const MethodContext& context, const MethodUnit& candidate,
                                    const ProjectConfig& config, std::string candidate_id = "");

struct ValidationResult {
  std::optional<MethodUnit> accepted;
  std::vector<ValidationReport> reports;
};

/// Validates in rank order and stops at the first accepted candidate.
ValidationResult validate_candidates(const MethodContext& context, const std::vector<MethodUnit>& ranked,
                                     const ProjectConfig& config);

/// Splice plus equivalence check, memoized by significant tokens.
Oracle as_oracle(const ProjectConfig& config, const MethodContext& context);

}  // namespace simplikit
