#include "simplikit/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "simplikit/diff.hpp"
#include "simplikit/error.hpp"
#include "simplikit/lexer.hpp"
#include "simplikit/localization.hpp"
#include "simplikit/process.hpp"
#include "simplikit/source_file.hpp"

namespace simplikit {

namespace {

bool is_java(const std::string& path) { return path.size() > 5 && path.ends_with(".java"); }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

std::string git(const std::filesystem::path& repo, const std::string& args) {
  const ProcessResult r = run_command("git -C " + shell_quote(repo.string()) + " " + args, repo, 120, {}, 1u << 28);
  if (r.timed_out || r.exit_code != 0) {
    throw ValidationError("checkout-missing", "git " + args + " failed in " + repo.string() + ": " + r.output);
  }
  return r.output;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string project_of(const std::string& path, const std::string& fallback, int depth) {
  if (depth <= 0) return fallback;
  std::string out;
  std::size_t pos = 0;
  for (int i = 0; i < depth; ++i) {
    const std::size_t slash = path.find('/', pos);
    if (slash == std::string::npos) return fallback;
    pos = slash + 1;
  }
  out = path.substr(0, pos - 1);
  return out;
}

}  // namespace

nlohmann::json to_json(const DatasetRecord& r) {
  nlohmann::json hunks = nlohmann::json::array();
  for (const HunkSummary& h : r.hunks) hunks.push_back({{"anchor", h.anchor}, {"deleted", h.deleted}, {"added", h.added}});
  return {
      {"project", r.project},
      {"commit", r.commit},
      {"file_path", r.file_path},
      {"method_name", r.method_name},
      {"original", r.original},
      {"simplified", r.simplified},
      {"localized_original", r.localized_original},
      {"hunks", hunks},
      {"split", r.split},
      {"validity", r.validity},
      {"validity_reason", r.validity_reason},
      {"original_tokens", r.original_tokens},
      {"simplified_tokens", r.simplified_tokens},
      {"original_sloc", r.original_sloc},
      {"simplified_sloc", r.simplified_sloc},
  };
}

DatasetRecord dataset_record_from_json(const nlohmann::json& j) {
  DatasetRecord r;
  try {
    r.project = j.at("project").get<std::string>();
    r.commit = j.value("commit", "");
    r.file_path = j.value("file_path", "");
    r.method_name = j.value("method_name", "");
    r.original = j.at("original").get<std::string>();
    r.simplified = j.at("simplified").get<std::string>();
    r.localized_original = j.value("localized_original", "");
    if (j.contains("hunks")) {
      for (const auto& h : j.at("hunks")) r.hunks.push_back({h.at("anchor"), h.at("deleted"), h.at("added")});
    }
    r.split = j.value("split", "");
    r.validity = j.value("validity", "whole");
    r.validity_reason = j.value("validity_reason", "");
    r.original_tokens = j.value("original_tokens", token_count(r.original));
    r.simplified_tokens = j.value("simplified_tokens", token_count(r.simplified));
    r.original_sloc = j.value("original_sloc", sloc(r.original));
    r.simplified_sloc = j.value("simplified_sloc", sloc(r.simplified));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad dataset record: ") + e.what());
  }
  return r;
}

nlohmann::json to_json(const CommitRecord& c) {
  nlohmann::json files = nlohmann::json::array();
  for (const FileChange& f : c.files) files.push_back({{"path", f.path}, {"before", f.before}, {"after", f.after}});
  return {{"project", c.project}, {"commit", c.commit}, {"message", c.message}, {"files", files}};
}

CommitRecord commit_record_from_json(const nlohmann::json& j) {
  CommitRecord c;
  try {
    c.project = j.at("project").get<std::string>();
    c.commit = j.at("commit").get<std::string>();
    c.message = j.value("message", "");
    for (const auto& f : j.at("files")) c.files.push_back({f.at("path"), f.value("before", ""), f.value("after", "")});
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad commit record: ") + e.what());
  }
  return c;
}

namespace {

template <typename T, typename F>
std::vector<T> read_jsonl(const std::filesystem::path& path, F&& convert) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::vector<T> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    try {
      out.push_back(convert(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path) {
  return read_jsonl<DatasetRecord>(path, dataset_record_from_json);
}

std::string dataset_to_jsonl(const std::vector<DatasetRecord>& records) {
  std::string out;
  for (const DatasetRecord& r : records) out += to_json(r).dump() + "\n";
  return out;
}

void write_dataset(const std::filesystem::path& path, const std::vector<DatasetRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << dataset_to_jsonl(records);
}

std::vector<CommitRecord> read_commit_dump(const std::filesystem::path& path) {
  return read_jsonl<CommitRecord>(path, commit_record_from_json);
}

bool matches_keywords(std::string_view message) {
  static const std::regex simplify(R"(\bsimplif(y|ies|ied|ying|ication|ications)\b)", std::regex::icase);
  static const std::regex object(R"(\b(code|program)\b)", std::regex::icase);
  const std::string m(message);
  return std::regex_search(m, simplify) && std::regex_search(m, object);
}

std::vector<CommitRecord> filter_commits(const std::vector<CommitRecord>& records) {
  std::vector<CommitRecord> out;
  for (const CommitRecord& c : records) {
    if (!matches_keywords(c.message)) continue;
    if (std::any_of(c.files.begin(), c.files.end(), [](const FileChange& f) { return is_java(f.path); })) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<DatasetRecord> extract_pairs(const CommitRecord& commit, ExtractStats* stats, int token_cap) {
  ExtractStats local;
  ExtractStats& st = stats ? *stats : local;
  std::vector<DatasetRecord> out;
  for (const FileChange& f : commit.files) {
    if (!is_java(f.path) || f.before.empty() || f.after.empty()) continue;
    SourceFile before, after;
    try {
      before = parse_source_file(f.before, f.path);
      after = parse_source_file(f.after, f.path);
    } catch (const ParseError&) {
      ++st.unparseable_files;
      continue;
    }
    for (const MethodLocation& loc : before.methods) {
      const MethodLocation* twin = after.find_method(loc.qualified_name);
      const std::string_view a = std::string_view(before.text).substr(loc.span.begin, loc.span.size());
      if (!twin) {
        ++st.unmatched_methods;
        continue;
      }
      const std::string_view b = std::string_view(after.text).substr(twin->span.begin, twin->span.size());
      if (token_key(a) == token_key(b)) continue;
      const std::vector<DiffHunk> all = diff(a, b);
      std::vector<DiffHunk> hunks;
      bool ok = true;
      for (const DiffHunk& h : all) {
        if (h.significant_deleted() == 0 && h.significant_added() == 0) continue;
        if (!qualifies_as_simplification(h)) ok = false;
        hunks.push_back(h);
      }
      if (!ok || hunks.empty()) {
        ++st.non_qualifying;
        continue;
      }
      DatasetRecord r;
      r.original = std::string(a);
      r.simplified = std::string(b);
      r.original_tokens = token_count(a);
      r.simplified_tokens = token_count(b);
      if (r.original_tokens > token_cap || r.simplified_tokens > token_cap) {
        ++st.over_cap;
        continue;
      }
      r.project = commit.project;
      r.commit = commit.commit;
      r.file_path = f.path;
      r.method_name = loc.qualified_name;
      r.localized_original = encode_localized(a, hunks);
      for (const DiffHunk& h : hunks) {
        const int anchor = h.deleted.empty() ? h.anchor : h.deleted.front().number;
        r.hunks.push_back({anchor, h.significant_deleted(), h.significant_added()});
      }
      r.original_sloc = sloc(a);
      r.simplified_sloc = sloc(b);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::map<std::string, std::string> assign_splits(std::vector<std::string> projects, std::uint64_t seed) {
  std::sort(projects.begin(), projects.end());
  projects.erase(std::unique(projects.begin(), projects.end()), projects.end());
  const std::string salt = std::to_string(seed) + ":";
  std::stable_sort(projects.begin(), projects.end(), [&](const std::string& a, const std::string& b) {
    return fnv1a(salt + a) < fnv1a(salt + b);
  });
  const auto n = static_cast<double>(projects.size());
  const auto train = static_cast<std::size_t>(std::lround(0.8 * n));
  const auto valid = static_cast<std::size_t>(std::lround(0.1 * n));
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < projects.size(); ++i) {
    out[projects[i]] = std::string(i < train ? kSplitTrain : i < train + valid ? kSplitValid : kSplitTest);
  }
  return out;
}

void split(std::vector<DatasetRecord>& records, std::uint64_t seed) {
  std::vector<std::string> projects;
  for (const DatasetRecord& r : records) projects.push_back(r.project);
  const auto assignment = assign_splits(std::move(projects), seed);
  for (DatasetRecord& r : records) r.split = assignment.at(r.project);
}

ProjectValidity check_project_validity(const ProjectConfig& config) {
  std::error_code ec;
  if (!std::filesystem::is_directory(config.root, ec)) return {false, "checkout-missing"};
  const Workspace ws = copy_project(config);
  const EquivalenceResult r = check_equivalence(ws, config);
  if (!r.compiled) return {false, r.timed_out ? "build-timeout" : "build-failure"};
  if (r.timed_out) return {false, "test-timeout"};
  if (r.outcome.total == 0) return {false, "no-tests"};
  if (!r.outcome.all_passed()) return {false, "test-failure"};
  return {true, ""};
}

void apply_validity(DatasetRecord& record, const ProjectValidity& v) {
  record.validity = v.valid ? "valid" : "whole";
  record.validity_reason = v.reason;
}

void mark_valid(DatasetRecord& record, const ProjectConfig& config) {
  apply_validity(record, check_project_validity(config));
}

std::vector<CommitRecord> read_git_history(const std::filesystem::path& repo, const std::string& project,
                                           const GitOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_directory(repo, ec)) throw ValidationError("checkout-missing", repo.string());
  std::vector<CommitRecord> out;
  const std::string log = git(repo, "log --reverse --format=%H%x1f%P%x1f%B%x1e");
  for (const std::string& entry : split_on(log, '\x1e')) {
    std::vector<std::string> fields = split_on(entry, '\x1f');
    if (fields.size() < 2) continue;
    std::string hash(trim(fields[0]));
    if (hash.empty()) continue;
    const std::string parents(trim(fields[1]));
    const std::string parent = parents.substr(0, parents.find(' '));
    const std::string message = fields.size() > 2 ? std::string(trim(fields[2])) : "";
    const std::string names = git(repo, parent.empty() ? "diff-tree --root --no-commit-id -r --name-status " + hash
                                                       : "diff-tree --no-commit-id -r --name-status " + parent + " " + hash);
    std::map<std::string, CommitRecord> by_project;
    for (const std::string& line : split_on(names, '\n')) {
      const auto tab = line.find('\t');
      if (tab == std::string::npos) continue;
      const std::string status = line.substr(0, tab);
      const std::string path = line.substr(tab + 1);
      FileChange fc{path, "", ""};
      if (is_java(path)) {
        if (status != "A" && !parent.empty()) fc.before = git(repo, "show " + shell_quote(parent + ":" + path));
        if (status != "D") fc.after = git(repo, "show " + shell_quote(hash + ":" + path));
      }
      const std::string proj = project_of(path, project, options.project_depth);
      CommitRecord& c = by_project[proj];
      c.project = proj;
      c.commit = hash;
      c.message = message;
      c.files.push_back(std::move(fc));
    }
    for (auto& [_, c] : by_project) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace simplikit
