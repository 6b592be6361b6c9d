#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "corpus_repo.hpp"
#include "java_project.hpp"
#include "simplikit/corpus.hpp"
#include "simplikit/error.hpp"
#include "simplikit/localization.hpp"

using namespace simplikit;
namespace st = simplikit::testing;

namespace {

std::string wrap(const std::string& method) { return "package p;\n\nclass C {\n" + method + "\n}\n"; }

CommitRecord commit_of(const std::string& before, const std::string& after, std::string message = "Simplify code") {
  return CommitRecord{"proj", "abc123", std::move(message), {{"src/C.java", wrap(before), wrap(after)}}};
}

std::string big_method(int statements) {
  std::string s = "void big() {\n";
  for (int i = 0; i < statements; ++i) s += "    call(a, b, c, d);\n";
  return s + "}";
}

fs::path temp_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("simplikit-corpus-" + std::to_string(::getpid()) + "-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(Keywords, WholeWordConjunction) {
  EXPECT_TRUE(matches_keywords("Simplify code in parser"));
  EXPECT_TRUE(matches_keywords("simplified program flow"));
  EXPECT_TRUE(matches_keywords("CODE SIMPLIFICATION"));
  EXPECT_TRUE(matches_keywords("simplifies the code"));
  EXPECT_FALSE(matches_keywords("fix NPE"));
  EXPECT_FALSE(matches_keywords("simplify docs"));
  EXPECT_FALSE(matches_keywords("oversimplified code"));
  EXPECT_FALSE(matches_keywords("simplify codec handling"));
}

TEST(FilterCommits, RequiresJavaFile) {
  const std::vector<CommitRecord> in = {
      {"p", "1", "Simplify code in parser", {{"Foo.java", "a", "b"}}},
      {"p", "2", "simplified program flow", {{"src/Foo.java", "a", "b"}, {"README.md", "", ""}}},
      {"p", "3", "fix NPE", {{"Foo.java", "a", "b"}}},
      {"p", "4", "Simplify code", {{"notes.txt", "a", "b"}}},
  };
  const auto out = filter_commits(in);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].commit, "1");
  EXPECT_EQ(out[1].commit, "2");
}

TEST(ExtractPairs, ListingSevenCommit) {
  const std::string before = st::read_fixture("listings/listing7_original.java");
  const std::string after = st::read_fixture("listings/listing7_simplified.java");
  const auto records = extract_pairs(commit_of(before, after));
  ASSERT_EQ(records.size(), 1u);
  const DatasetRecord& r = records[0];
  EXPECT_EQ(r.original, before.substr(0, before.find_last_of('}') + 1));
  EXPECT_EQ(r.simplified, after.substr(0, after.find_last_of('}') + 1));
  EXPECT_EQ(r.method_name, "p.C#getAuditRequestLogs()");
  EXPECT_EQ(r.file_path, "src/C.java");
  EXPECT_EQ(r.original_sloc, 4);
  EXPECT_EQ(r.simplified_sloc, 3);
  ASSERT_EQ(r.hunks.size(), 1u);
  EXPECT_EQ(r.hunks[0], (HunkSummary{2, 2, 1}));
  EXPECT_NE(r.localized_original.find("<original>"), std::string::npos);
  EXPECT_EQ(strip_markers(r.localized_original), r.original);
}

TEST(ExtractPairs, NonQualifyingHunkDropped) {
  ExtractStats stats;
  const auto records = extract_pairs(
      commit_of("int f() {\n    return a + b;\n}", "int f() {\n    int s = a + b;\n    return s;\n}"), &stats);
  EXPECT_TRUE(records.empty());
  EXPECT_EQ(stats.non_qualifying, 1);
}

TEST(ExtractPairs, TokenCap) {
  ExtractStats stats;
  const std::string before = big_method(47);  // 6 + 47 * 11 = 523 tokens
  const std::string after = big_method(45);
  EXPECT_TRUE(extract_pairs(commit_of(before, after), &stats).empty());
  EXPECT_EQ(stats.over_cap, 1);
  EXPECT_EQ(extract_pairs(commit_of(big_method(46), big_method(44))).size(), 1u);
}

TEST(ExtractPairs, UnalteredAndUnparseable) {
  EXPECT_TRUE(extract_pairs(commit_of("int f() { return 1; }", "int f() {\n  return 1; // same\n}")).empty());
  ExtractStats stats;
  CommitRecord broken{"p", "c", "Simplify code", {{"A.java", "class A { void f( }", "class A {}"}}};
  EXPECT_TRUE(extract_pairs(broken, &stats).empty());
  EXPECT_EQ(stats.unparseable_files, 1);
}

TEST(ExtractPairs, OneRecordPerChangedMethod) {
  const std::string before = "class C {\n    int a() {\n        int x = 1;\n        return x;\n    }\n\n    int b() {\n        int y = 2;\n        return y;\n    }\n\n    int c() { return 3; }\n}\n";
  const std::string after = "class C {\n    int a() {\n        return 1;\n    }\n\n    int b() {\n        return 2;\n    }\n\n    int c() { return 3; }\n}\n";
  const auto records = extract_pairs(CommitRecord{"p", "h", "m", {{"C.java", before, after}}});
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].method_name, "C#a()");
  EXPECT_EQ(records[1].method_name, "C#b()");
}

TEST(Jsonl, RoundTrip) {
  auto records = extract_pairs(commit_of(st::read_fixture("listings/listing8_original.java"),
                                         st::read_fixture("listings/listing8_simplified.java")));
  ASSERT_EQ(records.size(), 1u);
  records[0].split = "train";
  records[0].validity_reason = "no-tests";
  const fs::path dir = temp_dir("jsonl");
  write_dataset(dir / "ds.jsonl", records);
  const auto back = read_dataset(dir / "ds.jsonl");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], records[0]);
  const auto j = to_json(records[0]);
  for (const char* key : {"project", "commit", "file_path", "method_name", "original", "simplified",
                          "localized_original", "hunks", "split", "validity", "original_tokens", "simplified_tokens",
                          "original_sloc", "simplified_sloc"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_NE(j["localized_original"].get<std::string>().find("<original>"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Split, EightOneOne) {
  std::vector<std::string> projects;
  for (int i = 0; i < 10; ++i) projects.push_back("proj" + std::to_string(i));
  const auto a = assign_splits(projects, 7);
  std::map<std::string, int> counts;
  for (const auto& [_, s] : a) ++counts[s];
  EXPECT_EQ(counts["train"], 8);
  EXPECT_EQ(counts["valid-split"], 1);
  EXPECT_EQ(counts["test"], 1);
  EXPECT_EQ(assign_splits(projects, 7), a);
  std::reverse(projects.begin(), projects.end());
  EXPECT_EQ(assign_splits(projects, 7), a);
}

TEST(Split, RatiosWithinOneProject) {
  for (int n = 1; n <= 40; ++n) {
    std::vector<std::string> projects;
    for (int i = 0; i < n; ++i) projects.push_back("q" + std::to_string(i));
    std::map<std::string, int> counts;
    for (const auto& [_, s] : assign_splits(projects, 3)) ++counts[s];
    EXPECT_LE(std::abs(counts["train"] - 0.8 * n), 1.0) << n;
    EXPECT_LE(std::abs(counts["valid-split"] - 0.1 * n), 1.0) << n;
    EXPECT_LE(std::abs(counts["test"] - 0.1 * n), 1.0) << n;
  }
}

TEST(Split, ProjectDisjoint) {
  std::vector<DatasetRecord> records;
  for (int i = 0; i < 30; ++i) {
    DatasetRecord r;
    r.project = "p" + std::to_string(i % 10);
    records.push_back(r);
  }
  split(records, 11);
  std::map<std::string, std::set<std::string>> per_project;
  for (const auto& r : records) per_project[r.project].insert(r.split);
  for (const auto& [_, splits] : per_project) EXPECT_EQ(splits.size(), 1u);
}

TEST(Git, FixtureRepoPipeline) {
  const fs::path dir = temp_dir("git");
  st::make_corpus_repo(dir / "repo");
  const auto commits = read_git_history(dir / "repo", "fixture", {1});
  std::set<std::string> hashes;
  for (const auto& c : commits) hashes.insert(c.commit);
  EXPECT_EQ(hashes.size(), 12u);

  const auto kept = filter_commits(commits);
  std::set<std::string> messages;
  for (const auto& c : kept) messages.insert(c.message);
  EXPECT_EQ(kept.size(), 10u);
  EXPECT_EQ(messages.count("Initial import of oversimplified code samples"), 0u);
  EXPECT_EQ(messages.count("Simplify code style notes"), 0u);

  std::vector<DatasetRecord> records;
  for (const auto& c : kept) {
    auto r = extract_pairs(c);
    records.insert(records.end(), r.begin(), r.end());
  }
  EXPECT_EQ(records.size(), 11u);
  split(records, 7);
  std::map<std::string, std::string> assignment;
  for (const auto& r : records) assignment[r.project] = r.split;
  EXPECT_EQ(assignment.size(), 10u);

  // a second build of the repository gives byte-identical output
  st::make_corpus_repo(dir / "again");
  std::vector<DatasetRecord> again;
  for (const auto& c : filter_commits(read_git_history(dir / "again", "fixture", {1}))) {
    auto r = extract_pairs(c);
    again.insert(again.end(), r.begin(), r.end());
  }
  split(again, 7);
  EXPECT_EQ(dataset_to_jsonl(again), dataset_to_jsonl(records));
  fs::remove_all(dir);
}

TEST(Git, MissingCheckout) {
  EXPECT_THROW(read_git_history("/nonexistent/repo", "x"), ValidationError);
}

TEST(Commits, DumpRoundTrip) {
  const fs::path dir = temp_dir("dump");
  const CommitRecord c{"p", "h", "Simplify code", {{"A.java", "class A {}", "class A { }"}}};
  std::ofstream(dir / "dump.jsonl") << to_json(c).dump() << "\n\n" << to_json(c).dump() << "\n";
  const auto back = read_commit_dump(dir / "dump.jsonl");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].files[0].after, "class A { }");
  std::ofstream(dir / "bad.jsonl") << "{not json\n";
  EXPECT_THROW(read_commit_dump(dir / "bad.jsonl"), ConfigError);
  fs::remove_all(dir);
}

TEST(Validity, ShellProjects) {
  const fs::path dir = temp_dir("validity");
  ProjectConfig c;
  c.root = dir;
  c.build_command = "true";
  c.test_command = "mkdir -p r && echo '<testsuite/>' > r/t.xml";
  c.mode = ResultMode::ReportFiles;
  c.report_dir = "r";
  c.timeout_seconds = 10;
  c.workspace_dir = dir.string() + "-ws";
  EXPECT_EQ(check_project_validity(c).reason, "no-tests");
  c.build_command = "false";
  DatasetRecord r;
  mark_valid(r, c);
  EXPECT_EQ(r.validity, "whole");
  EXPECT_EQ(r.validity_reason, "build-failure");
  c.root = dir / "missing";
  EXPECT_EQ(check_project_validity(c).reason, "checkout-missing");
  fs::remove_all(dir);
  fs::remove_all(c.workspace_dir);
}

TEST(Validity, MiniJavaProjectIsValid) {
  if (!st::java_available()) GTEST_SKIP() << "no Java toolchain";
  DatasetRecord r;
  mark_valid(r, st::java_project_config());
  EXPECT_EQ(r.validity, "valid") << r.validity_reason;
}
