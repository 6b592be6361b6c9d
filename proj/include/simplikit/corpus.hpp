#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simplikit/validator.hpp"

namespace simplikit {

struct FileChange {
  std::string path;
  std::string before;  // empty for added files
  std::string after;   // empty for deleted files
};

struct CommitRecord {
  std::string project;
  std::string commit;
  std::string message;
  std::vector<FileChange> files;
};

struct HunkSummary {
  int anchor = 0;  // first original line of the hunk
  int deleted = 0;  // significant lines
  int added = 0;
  friend bool operator==(const HunkSummary&, const HunkSummary&) = default;
};

inline constexpr std::string_view kSplitTrain = "train";
inline constexpr std::string_view kSplitValid = "valid-split";
inline constexpr std::string_view kSplitTest = "test";

struct DatasetRecord {
  std::string project;
  std::string commit;
  std::string file_path;
  std::string method_name;  // qualified
  std::string original;
  std::string simplified;
  std::string localized_original;
  std::vector<HunkSummary> hunks;
  std::string split;  // train | valid-split | test, empty before split()
  std::string validity = "whole";  // whole | valid
  std::string validity_reason;
  int original_tokens = 0;
  int simplified_tokens = 0;
  int original_sloc = 0;
  int simplified_sloc = 0;

  std::string id() const { return project + "@" + commit + ":" + method_name; }
  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

nlohmann::json to_json(const DatasetRecord& r);
DatasetRecord dataset_record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CommitRecord& c);
CommitRecord commit_record_from_json(const nlohmann::json& j);

std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path);
void write_dataset(const std::filesystem::path& path, const std::vector<DatasetRecord>& records);
std::string dataset_to_jsonl(const std::vector<DatasetRecord>& records);

/// A simplify-family word and "code" or "program", whole words, any case.
bool matches_keywords(std::string_view message);

/// Keyword-matching commits that touch at least one .java file.
std::vector<CommitRecord> filter_commits(const std::vector<CommitRecord>& records);

struct ExtractStats {
  int unparseable_files = 0;
  int over_cap = 0;
  int non_qualifying = 0;
  int unmatched_methods = 0;
};

/// One record per changed method whose hunks all qualify as simplifications.
std::vector<DatasetRecord> extract_pairs(const CommitRecord& commit, ExtractStats* stats = nullptr,
                                         int token_cap = 512);

/// Seeded project-level 8:1:1 assignment.
std::map<std::string, std::string> assign_splits(std::vector<std::string> projects, std::uint64_t seed);
void split(std::vector<DatasetRecord>& records, std::uint64_t seed);

struct ProjectValidity {
  bool valid = false;
  std::string reason;  // build-failure, build-timeout, test-failure, no-tests, checkout-missing
};

/// Builds and tests the unmodified project.
ProjectValidity check_project_validity(const ProjectConfig& config);
void mark_valid(DatasetRecord& record, const ProjectConfig& config);
void apply_validity(DatasetRecord& record, const ProjectValidity& validity);

struct GitOptions {
  /// Leading path components naming the project; 0 uses `project` for the whole repo.
  int project_depth = 0;
};

/// Commits of a local git checkout, oldest first. Only .java texts are loaded.
std::vector<CommitRecord> read_git_history(const std::filesystem::path& repo, const std::string& project,
                                           const GitOptions& options = {});

/// Pre-crawled commits, one JSON object per line.
std::vector<CommitRecord> read_commit_dump(const std::filesystem::path& path);

}  // namespace simplikit
