#include "simplikit/validator.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "simplikit/catalog.hpp"
#include "simplikit/config.hpp"
#include "simplikit/error.hpp"
#include "simplikit/lexer.hpp"
#include "simplikit/process.hpp"

namespace simplikit {

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ValidationError("io-failure", "cannot read " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("io-failure", "cannot write " + p.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw ValidationError("io-failure", "cannot write " + p.string());
}

fs::path resolve(const ProjectConfig& config, const fs::path& file) {
  return file.is_absolute() ? file : config.root / file;
}

fs::path make_workspace_dir(const ProjectConfig& config) {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  const fs::path base = config.workspace_dir.empty() ? fs::temp_directory_path(ec) : config.workspace_dir;
  fs::create_directories(base, ec);
  if (ec || !fs::is_directory(base)) throw ValidationError("io-failure", "cannot create workspace under " + base.string());
  std::random_device rd;
  for (int attempt = 0; attempt < 100; ++attempt) {
    const fs::path dir = base / ("simplikit-ws-" + std::to_string(getpid()) + "-" + std::to_string(counter++) + "-" +
                                 std::to_string(rd() % 100000));
    if (fs::create_directory(dir, ec)) return dir;
  }
  throw ValidationError("io-failure", "cannot create workspace under " + base.string());
}

void copy_tree(const fs::path& from, const fs::path& to) {
  std::error_code ec;
  for (auto it = fs::directory_iterator(from, ec); !ec && it != fs::directory_iterator(); it.increment(ec)) {
    const fs::path name = it->path().filename();
    if (name == ".git") continue;
    const fs::path dest = to / name;
    if (it->is_directory(ec) && !it->is_symlink(ec)) {
      fs::create_directory(dest, ec);
      if (ec) break;
      copy_tree(it->path(), dest);
    } else {
      fs::copy(it->path(), dest, fs::copy_options::copy_symlinks | fs::copy_options::overwrite_existing, ec);
      if (ec) break;
    }
  }
  if (ec) throw ValidationError("io-failure", "copying " + from.string() + ": " + ec.message());
}

TestOutcome exit_code_outcome(bool passed) {
  TestOutcome o;
  o.total = 1;
  (passed ? o.passed : o.failed) = 1;
  o.tests.push_back({"test-command", passed ? "passed" : "failed"});
  return o;
}

std::optional<TestOutcome> read_reports(const fs::path& dir) {
  TestOutcome total;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return std::nullopt;
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir, ec))
    if (e.path().extension() == ".xml") files.push_back(e.path());
  if (files.empty()) return std::nullopt;
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) {
    TestOutcome o;
    try {
      o = parse_junit_xml(read_file(f));
    } catch (const boost::property_tree::ptree_error& e) {
      throw ValidationError("io-failure", "bad test report " + f.string() + ": " + e.what());
    }
    total.total += o.total;
    total.passed += o.passed;
    total.failed += o.failed;
    total.errored += o.errored;
    total.skipped += o.skipped;
    total.tests.insert(total.tests.end(), o.tests.begin(), o.tests.end());
  }
  return total;
}

void collect_cases(const boost::property_tree::ptree& node, const std::string& suite, TestOutcome& out) {
  for (const auto& [tag, child] : node) {
    if (tag == "testsuite" || tag == "testsuites") {
      collect_cases(child, child.get<std::string>("<xmlattr>.name", suite), out);
    } else if (tag == "testcase") {
      std::string cls = child.get<std::string>("<xmlattr>.classname", suite);
      const std::string name = child.get<std::string>("<xmlattr>.name", "");
      std::string status = "passed";
      if (child.count("failure")) status = "failed";
      else if (child.count("error")) status = "errored";
      else if (child.count("skipped")) status = "skipped";
      ++out.total;
      if (status == "passed") ++out.passed;
      else if (status == "failed") ++out.failed;
      else if (status == "errored") ++out.errored;
      else ++out.skipped;
      out.tests.push_back({cls.empty() ? name : cls + "." + name, status});
    }
  }
}

}  // namespace

void ProjectConfig::check() const {
  if (root.empty()) throw ConfigError("project root is empty");
  if (build_command.empty()) throw ConfigError("build command is empty");
  if (test_command.empty()) throw ConfigError("test command is empty");
  if (!(timeout_seconds > 0)) throw ConfigError("timeout must be positive");
  if (reruns < 1) throw ConfigError("reruns must be at least 1");
  if (workers < 1) throw ConfigError("workers must be at least 1");
}

ProjectConfig project_config_from_json(const nlohmann::json& doc, const fs::path& base) {
  const nlohmann::json& p = doc.contains("project") ? doc.at("project") : doc;
  if (!p.is_object()) throw ConfigError("[project] must be a table");
  ProjectConfig c;
  try {
    const fs::path root = p.value("root", std::string("."));
    c.root = root.is_absolute() ? root : fs::weakly_canonical(base / root);
    c.build_command = p.value("build", std::string());
    c.test_command = p.value("test", std::string());
    c.timeout_seconds = p.value("timeout", 300.0);
    const std::string mode = p.value("mode", std::string("exit-code"));
    if (mode == "exit-code") c.mode = ResultMode::ExitCode;
    else if (mode == "report-files") c.mode = ResultMode::ReportFiles;
    else throw ConfigError("unknown result mode '" + mode + "'");
    c.report_dir = p.value("reports", std::string("test-reports"));
    c.reruns = p.value("reruns", 1);
    c.workers = p.value("workers", std::size_t{1});
    if (p.contains("workspace_dir")) {
      const fs::path w = p.at("workspace_dir").get<std::string>();
      c.workspace_dir = w.is_absolute() ? w : base / w;
    }
    c.keep_workspaces = p.value("keep_workspaces", false);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad [project] entry: ") + e.what());
  }
  c.check();
  return c;
}

ProjectConfig load_project_config(const fs::path& path) {
  return project_config_from_json(load_config_file(path), fs::absolute(path).parent_path());
}

TestOutcome parse_junit_xml(const std::string& xml) {
  boost::property_tree::ptree tree;
  std::istringstream in(xml);
  boost::property_tree::read_xml(in, tree);
  TestOutcome out;
  collect_cases(tree, "", out);
  return out;
}

std::string_view to_string(Verdict v) { return v == Verdict::Accepted ? "accepted" : "rejected"; }

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::None: return "";
    case Reason::CompileFailure: return "compile-failure";
    case Reason::TestFailure: return "test-failure";
    case Reason::NotSmaller: return "not-smaller";
    case Reason::Unaltered: return "unaltered";
    case Reason::Timeout: return "timeout";
  }
  return "?";
}

nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json tests = nlohmann::json::array();
  for (const TestCase& t : r.outcome.tests) tests.push_back({{"id", t.id}, {"status", t.status}});
  nlohmann::json j = {
      {"candidate_id", r.candidate_id},
      {"compiled", r.compiled},
      {"tests",
       {{"total", r.outcome.total},
        {"passed", r.outcome.passed},
        {"failed", r.outcome.failed},
        {"errored", r.outcome.errored},
        {"skipped", r.outcome.skipped},
        {"cases", tests}}},
      {"sloc", {r.sloc.before, r.sloc.after}},
      {"tokens", {r.tokens.before, r.tokens.after}},
      {"verdict", to_string(r.verdict)},
      {"reason", to_string(r.reason)},
  };
  if (r.metrics) {
    j["cyclomatic"] = {r.metrics->cyclomatic.before, r.metrics->cyclomatic.after};
    j["cognitive"] = {r.metrics->cognitive.before, r.metrics->cognitive.after};
  }
  return j;
}

Workspace::Workspace(Workspace&& other) noexcept
    : root_(std::move(other.root_)), file_(std::move(other.file_)), keep_(other.keep_) {
  other.root_.clear();
}

Workspace::~Workspace() {
  if (root_.empty() || keep_) return;
  std::error_code ec;
  fs::remove_all(root_, ec);
}

Workspace splice(const ProjectConfig& config, const fs::path& file, Span method_span, std::string_view candidate_text) {
  const fs::path source = resolve(config, file);
  std::error_code ec;
  if (!fs::is_directory(config.root, ec)) throw ValidationError("io-failure", "project root missing: " + config.root.string());
  if (!fs::is_regular_file(source, ec)) throw ValidationError("io-failure", "source file missing: " + source.string());
  const fs::path rel = fs::relative(source, config.root, ec);
  if (ec || rel.empty() || *rel.begin() == "..") {
    throw ValidationError("io-failure", source.string() + " is not under " + config.root.string());
  }
  const std::string text = read_file(source);
  bool matches = false;
  try {
    const SourceFile sf = parse_source_file(text, source.string());
    matches = std::any_of(sf.methods.begin(), sf.methods.end(),
                          [&](const MethodLocation& m) { return m.span == method_span; });
  } catch (const ParseError&) {
  }
  if (!matches) {
    throw ValidationError("span-mismatch", "no method at [" + std::to_string(method_span.begin) + ", " +
                                               std::to_string(method_span.end) + ") in " + source.string());
  }
  const fs::path dir = make_workspace_dir(config);
  Workspace ws(dir, dir / rel, config.keep_workspaces);
  copy_tree(config.root, ws.root());
  std::string spliced = text.substr(0, method_span.begin);
  spliced += candidate_text;
  spliced += text.substr(method_span.end);
  write_file(ws.file(), spliced);
  return ws;
}

Workspace copy_project(const ProjectConfig& config) {
  std::error_code ec;
  if (!fs::is_directory(config.root, ec)) throw ValidationError("io-failure", "project root missing: " + config.root.string());
  const fs::path dir = make_workspace_dir(config);
  Workspace ws(dir, fs::path(), config.keep_workspaces);
  copy_tree(config.root, ws.root());
  return ws;
}

EquivalenceResult check_equivalence(const Workspace& ws, const ProjectConfig& config) {
  EquivalenceResult r;
  const ProcessResult build = run_command(config.build_command, ws.root(), config.timeout_seconds);
  r.log = build.output;
  if (build.timed_out) {
    r.timed_out = true;
    return r;
  }
  if (build.exit_code != 0) return r;
  r.compiled = true;
  for (int run = 0; run < config.reruns; ++run) {
    std::error_code ec;
    fs::remove_all(ws.root() / config.report_dir, ec);
    const ProcessResult test = run_command(config.test_command, ws.root(), config.timeout_seconds);
    r.log += test.output;
    if (test.timed_out) {
      r.timed_out = true;
      return r;
    }
    TestOutcome o;
    if (config.mode == ResultMode::ExitCode) {
      o = exit_code_outcome(test.exit_code == 0);
    } else {
      const std::optional<TestOutcome> reports = read_reports(ws.root() / config.report_dir);
      if (!reports && test.exit_code == 0) {
        throw ValidationError("io-failure", "no test reports under " + (ws.root() / config.report_dir).string());
      }
      if (reports) o = *reports;
      if (test.exit_code != 0 && o.failed == 0 && o.errored == 0) {
        ++o.total;
        ++o.errored;
        o.tests.push_back({"test-command", "errored"});
      }
    }
    r.outcome = o;
    if (!o.all_passed()) break;
  }
  return r;
}

MethodContext method_context(const ProjectConfig& config, const fs::path& file, std::string_view method) {
  const fs::path source = resolve(config, file);
  const SourceFile sf = parse_source_file(read_file(source), source.string());
  const MethodLocation* found = sf.find_method(method);
  if (!found) {
    for (const MethodLocation& m : sf.methods) {
      const auto hash = m.qualified_name.find('#');
      const auto paren = m.qualified_name.find('(', hash);
      if (m.qualified_name.substr(hash + 1, paren - hash - 1) != method) continue;
      if (found) throw ConfigError("method name '" + std::string(method) + "' is ambiguous in " + source.string());
      found = &m;
    }
  }
  if (!found) throw ConfigError("no method '" + std::string(method) + "' in " + source.string());
  return MethodContext{file, found->span, sf.method(*found)};
}

ValidationReport validate_candidate(const MethodContext& ctx, const MethodUnit& candidate, const ProjectConfig& config,
                                    std::string candidate_id) {
  ValidationReport rep;
  rep.candidate_id = std::move(candidate_id);
  rep.sloc = {ctx.original.sloc, candidate.sloc};
  rep.tokens = {ctx.original.token_count, candidate.token_count};
  if (token_key(candidate.source) == token_key(ctx.original.source)) {
    rep.reason = Reason::Unaltered;
    return rep;
  }
  if (!is_smaller(candidate, ctx.original)) {
    rep.reason = Reason::NotSmaller;
    return rep;
  }
  const Workspace ws = splice(config, ctx.file, ctx.span, candidate.source);
  const EquivalenceResult eq = check_equivalence(ws, config);
  rep.compiled = eq.compiled;
  rep.outcome = eq.outcome;
  rep.log = eq.log;
  if (eq.timed_out) {
    rep.reason = Reason::Timeout;
  } else if (!eq.compiled) {
    rep.reason = Reason::CompileFailure;
  } else if (!eq.outcome.all_passed()) {
    rep.reason = Reason::TestFailure;
  } else {
    rep.verdict = Verdict::Accepted;
    try {
      rep.metrics = quality_delta(ctx.original, candidate);
    } catch (const ParseError&) {
    }
  }
  return rep;
}

ValidationResult validate_candidates(const MethodContext& ctx, const std::vector<MethodUnit>& ranked,
                                     const ProjectConfig& config) {
  ValidationResult result;
  const std::size_t step = std::max<std::size_t>(config.workers, 1);
  for (std::size_t start = 0; start < ranked.size(); start += step) {
    const std::size_t stop = std::min(ranked.size(), start + step);
    std::vector<ValidationReport> batch;
    if (step == 1) {
      batch.push_back(validate_candidate(ctx, ranked[start], config, "c" + std::to_string(start)));
    } else {
      std::vector<std::future<ValidationReport>> futures;
      for (std::size_t i = start; i < stop; ++i) {
        futures.push_back(std::async(std::launch::async, [&, i] {
          return validate_candidate(ctx, ranked[i], config, "c" + std::to_string(i));
        }));
      }
      for (auto& f : futures) batch.push_back(f.get());
    }
    for (std::size_t k = 0; k < batch.size(); ++k) {
      result.reports.push_back(std::move(batch[k]));
      if (result.reports.back().verdict == Verdict::Accepted) {
        result.accepted = ranked[start + k];
        return result;
      }
    }
  }
  return result;
}

Oracle as_oracle(const ProjectConfig& config, const MethodContext& context) {
  struct Memo {
    std::mutex mu;
    std::map<std::string, bool> verdicts;
  };
  auto memo = std::make_shared<Memo>();
  return Oracle{[config, context, memo](const MethodUnit& candidate) {
                  const std::string key = token_key(candidate.source);
                  {
                    std::lock_guard lock(memo->mu);
                    if (auto it = memo->verdicts.find(key); it != memo->verdicts.end()) return it->second;
                  }
                  const Workspace ws = splice(config, context.file, context.span, candidate.source);
                  const EquivalenceResult eq = check_equivalence(ws, config);
                  const bool ok = !eq.timed_out && eq.compiled && eq.outcome.all_passed();
                  std::lock_guard lock(memo->mu);
                  memo->verdicts.emplace(key, ok);
                  return ok;
                },
                true};
}

}  // namespace simplikit
