#include "simplikit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "simplikit/catalog.hpp"
#include "simplikit/config.hpp"
#include "simplikit/corpus.hpp"
#include "simplikit/diff.hpp"
#include "simplikit/error.hpp"
#include "simplikit/eval.hpp"
#include "simplikit/gateway.hpp"
#include "simplikit/lexer.hpp"
#include "simplikit/localization.hpp"
#include "simplikit/metrics.hpp"
#include "simplikit/reducer.hpp"
#include "simplikit/validator.hpp"

namespace simplikit {

namespace {

using nlohmann::json;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Machine output: --out file when given, else the `out` stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw ConfigError("cannot write " + path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  void line(const json& j) { *stream_ << j.dump() << "\n"; }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct Options {
  std::string registry;
  std::string out;
  int workers = 1;

  // simplify / reduce / validate
  std::string backend = "catalog";
  int beam = 10;
  int max_len = 512;
  std::string project;
  std::string file;
  std::string method;
  std::vector<std::string> inputs;
  std::string dataset;
  bool localized = false;
  int inject_identity = 0;
  std::vector<std::string> candidate_files;
  bool no_validate = false;
  std::string granularity = "statement";

  // mine / split
  std::string git;
  std::string dump;
  std::string project_id;
  int project_depth = 0;
  int token_cap = 512;
  std::uint64_t seed = 0;

  // eval
  std::string pred;
  std::string gold;
};

ProjectConfig project_config(const Options& o) {
  ProjectConfig c = load_project_config(o.project);
  if (o.workers > 1) c.workers = static_cast<std::size_t>(o.workers);
  return c;
}

Gateway make_gateway(const Options& o, std::optional<ProjectConfig> project, std::optional<MethodContext> context) {
  json doc = json::object();
  if (!o.registry.empty()) doc = load_config_file(o.registry);
  ReducerBackend::OracleFactory factory;
  if (project && context) {
    factory = [cfg = *project, ctx = *context](const MethodUnit&) { return as_oracle(cfg, ctx); };
  }
  Gateway g = gateway_from_config(doc, factory);
  if (!g.has(o.backend)) throw BackendError("unknown-backend", "no backend '" + o.backend + "'");
  return g;
}

json report_list(const std::vector<ValidationReport>& reports) {
  json out = json::array();
  for (const ValidationReport& r : reports) out.push_back(to_json(r));
  return out;
}

struct SimplifyOutcome {
  json line;
  std::size_t candidates = 0;
  std::size_t removed = 0;
  bool accepted = false;
};

// generate -> inject -> filter_unaltered -> rank -> optional validate
SimplifyOutcome simplify_one(const Options& o, const Gateway& g, const std::string& input, const MethodUnit& original,
                             const std::optional<ProjectConfig>& project, const std::optional<MethodContext>& context) {
  GeneratorRequest req;
  req.input = input;
  req.beam_size = o.beam;
  req.max_len = o.max_len;
  req.backend = o.backend;
  CandidateSet set = g.generate(req);
  for (int i = 0; i < o.inject_identity; ++i) {
    // identity copies differing only in trailing whitespace
    std::string copy = original.source;
    for (int k = 0; k < i; ++k) copy += "\n";
    set.candidates.push_back({i % 2 ? copy + " " : copy, std::nullopt, Provenance::Neural, {}, std::nullopt});
  }
  for (const std::string& path : o.candidate_files) {
    set.candidates.push_back({read_text(path), std::nullopt, Provenance::Neural, {}, std::nullopt});
  }
  const std::size_t before = set.candidates.size();
  set = rank(filter_unaltered(set, original), original);
  SimplifyOutcome outcome;
  outcome.candidates = set.candidates.size();
  outcome.removed = before - set.candidates.size();
  json cands = json::array();
  for (const Candidate& c : set.candidates) cands.push_back(to_json(c));
  outcome.line = {{"method", original.qualified_name.empty() ? original.name() : original.qualified_name},
                  {"backend", o.backend},
                  {"candidates", cands},
                  {"unaltered_removed", outcome.removed},
                  {"accepted", nullptr}};
  if (project && context && !o.no_validate) {
    std::vector<MethodUnit> units;
    std::vector<ValidationReport> unparseable;
    for (std::size_t i = 0; i < set.candidates.size(); ++i) {
      try {
        MethodUnit u = parse_method(set.candidates[i].text);
        units.push_back(std::move(u));
      } catch (const ParseError& e) {
        ValidationReport r;
        r.candidate_id = "unparsed" + std::to_string(i);
        r.reason = Reason::CompileFailure;
        r.log = e.what();
        unparseable.push_back(r);
      }
    }
    ValidationResult vr = validate_candidates(*context, units, *project);
    vr.reports.insert(vr.reports.end(), unparseable.begin(), unparseable.end());
    outcome.line["reports"] = report_list(vr.reports);
    if (vr.accepted) {
      outcome.accepted = true;
      outcome.line["accepted"] = vr.accepted->source;
      outcome.line["quality"] = to_json(vr.reports[std::find_if(vr.reports.begin(), vr.reports.end(), [](const auto& r) {
                                                              return r.verdict == Verdict::Accepted;
                                                            }) - vr.reports.begin()]);
    }
  }
  return outcome;
}

int cmd_simplify(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<ProjectConfig> project;
  std::optional<MethodContext> context;
  if (!o.project.empty()) {
    project = project_config(o);
    if (o.file.empty() || o.method.empty()) throw ConfigError("--project needs --file and --method");
    context = method_context(*project, o.file, o.method);
  }
  if (o.backend == "reducer" && !context) throw ConfigError("the reducer backend needs --project, --file and --method");
  const Gateway g = make_gateway(o, project, context);
  Sink sink(o.out, out);
  std::size_t total = 0, removed = 0, accepted = 0, methods = 0;
  auto tally = [&](const SimplifyOutcome& s) {
    ++methods;
    total += s.candidates;
    removed += s.removed;
    accepted += s.accepted;
  };
  if (context) {
    SimplifyOutcome s = simplify_one(o, g, context->original.source, context->original, project, context);
    s.line["file"] = o.file;
    sink.line(s.line);
    tally(s);
  }
  for (const std::string& path : o.inputs) {
    const std::string text = read_text(path);
    const bool marked = text.find(kOriginalOpen) != std::string::npos;
    const MethodUnit original = parse_method(marked ? strip_markers(text) : text);
    SimplifyOutcome s = simplify_one(o, g, text, original, std::nullopt, std::nullopt);
    s.line["input"] = path;
    sink.line(s.line);
    tally(s);
  }
  if (!o.dataset.empty()) {
    for (const DatasetRecord& r : read_dataset(o.dataset)) {
      const MethodUnit original = parse_method(r.original);
      const std::string input = o.localized && !r.localized_original.empty() ? r.localized_original : r.original;
      SimplifyOutcome s = simplify_one(o, g, input, original, std::nullopt, std::nullopt);
      s.line["record_id"] = r.id();
      sink.line(s.line);
      tally(s);
    }
  }
  sink.stream().flush();
  err << "simplify: " << methods << " method(s), " << total << " candidate(s) kept, " << removed
      << " unaltered removed";
  if (project) err << ", " << accepted << " accepted";
  err << "\n";
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.project.empty() || o.file.empty() || o.method.empty()) throw ConfigError("reduce needs --project, --file and --method");
  const ProjectConfig project = project_config(o);
  const MethodContext ctx = method_context(project, o.file, o.method);
  ReduceOptions ro;
  if (o.granularity == "line") ro.granularity = Granularity::Line;
  else if (o.granularity != "statement") throw ConfigError("granularity must be statement or line");
  ro.workers = static_cast<std::size_t>(std::max(o.workers, 1));
  const ReductionResult r = ddmin_reduce(ctx.original, as_oracle(project, ctx), ro);
  Candidate c{r.unit.source, std::nullopt, Provenance::Deletion, {}, r.trace};
  json line = to_json(c);
  line["method"] = ctx.original.qualified_name;
  line["units"] = r.units.size();
  line["sloc"] = {ctx.original.sloc, r.unit.sloc};
  Sink sink(o.out, out);
  sink.line(line);
  sink.stream().flush();
  err << "reduce: kept " << r.trace.final_units.size() << " of " << r.units.size() << " unit(s) after "
      << r.trace.oracle_calls << " oracle call(s)\n";
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.project.empty() || o.file.empty() || o.method.empty()) {
    throw ConfigError("validate needs --project, --file and --method");
  }
  const ProjectConfig project = project_config(o);
  const MethodContext ctx = method_context(project, o.file, o.method);
  std::vector<MethodUnit> cands;
  for (const std::string& p : o.inputs) cands.push_back(parse_method(read_text(p)));
  const ValidationResult vr = validate_candidates(ctx, cands, project);
  Sink sink(o.out, out);
  for (const ValidationReport& r : vr.reports) sink.line(to_json(r));
  sink.stream().flush();
  for (const ValidationReport& r : vr.reports) {
    err << r.candidate_id << ": " << to_string(r.verdict);
    if (r.reason != Reason::None) err << " (" << to_string(r.reason) << ")";
    err << "\n";
  }
  return kExitOk;
}

int cmd_mine(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<CommitRecord> commits;
  if (!o.git.empty()) {
    const std::string id = o.project_id.empty() ? std::filesystem::path(o.git).filename().string() : o.project_id;
    commits = read_git_history(o.git, id, {o.project_depth});
  } else if (!o.dump.empty()) {
    commits = read_commit_dump(o.dump);
  } else {
    throw ConfigError("mine needs --git or --dump");
  }
  const std::vector<CommitRecord> kept = filter_commits(commits);
  std::vector<DatasetRecord> records;
  ExtractStats stats;
  for (const CommitRecord& c : kept) {
    auto r = extract_pairs(c, &stats, o.token_cap);
    records.insert(records.end(), r.begin(), r.end());
  }
  if (!o.project.empty()) {
    const ProjectValidity v = check_project_validity(project_config(o));
    for (DatasetRecord& r : records) apply_validity(r, v);
  }
  Sink sink(o.out, out);
  for (const DatasetRecord& r : records) sink.line(to_json(r));
  sink.stream().flush();
  std::set<std::string> hashes, kept_hashes;
  for (const auto& c : commits) hashes.insert(c.commit);
  for (const auto& c : kept) kept_hashes.insert(c.commit);
  err << "mine: " << hashes.size() << " commit(s), " << kept_hashes.size() << " kept, " << records.size()
      << " record(s); skipped " << stats.unparseable_files << " unparseable file(s), " << stats.over_cap
      << " over the token cap, " << stats.non_qualifying << " non-qualifying method(s)\n";
  return kExitOk;
}

int cmd_split(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.inputs.size() != 1) throw ConfigError("split takes one dataset file");
  std::vector<DatasetRecord> records = read_dataset(o.inputs[0]);
  split(records, o.seed);
  Sink sink(o.out, out);
  sink.stream() << dataset_to_jsonl(records);
  sink.stream().flush();
  std::map<std::string, std::set<std::string>> projects;
  for (const DatasetRecord& r : records) projects[r.split].insert(r.project);
  err << "split (seed " << o.seed << "):";
  for (const auto& name : {kSplitTrain, kSplitValid, kSplitTest}) {
    err << " " << name << "=" << projects[std::string(name)].size() << " project(s)";
  }
  err << "\n";
  return kExitOk;
}

// Predictions are simplify output lines carrying record_id.
int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.pred.empty() || o.gold.empty()) throw ConfigError("eval needs --pred and --gold");
  std::map<std::string, DatasetRecord> gold;
  for (DatasetRecord& r : read_dataset(o.gold)) gold.emplace(r.id(), std::move(r));
  std::ifstream in(o.pred, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + o.pred);
  std::vector<EvalRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    json p;
    try {
      p = json::parse(line);
    } catch (const json::exception& e) {
      throw ConfigError(o.pred + ": " + e.what());
    }
    const std::string id = p.value("record_id", "");
    const auto g = gold.find(id);
    if (g == gold.end()) throw ConfigError("prediction for unknown record '" + id + "'");
    std::string prediction = g->second.original;
    if (p.contains("accepted") && p["accepted"].is_string()) {
      prediction = p["accepted"].get<std::string>();
    } else if (p.contains("candidates") && !p["candidates"].empty()) {
      prediction = p["candidates"][0].value("text", prediction);
    } else if (p.contains("text")) {
      prediction = p["text"].get<std::string>();
    }
    EvalRow row = evaluate(id, p.value("backend", "unknown"), prediction, g->second.simplified, g->second.original);
    if (p.contains("reports")) {
      bool compiled = false;
      for (const auto& r : p["reports"]) compiled = compiled || r.value("compiled", false);
      row.compiled = compiled;
      row.test_equivalent = p.contains("accepted") && p["accepted"].is_string();
    }
    rows.push_back(std::move(row));
  }
  Sink sink(o.out, out);
  for (const EvalRow& r : rows) sink.line(to_json(r));
  const auto summaries = aggregate(rows);
  for (const BackendSummary& s : summaries) sink.line({{"summary", to_json(s)}});
  sink.stream().flush();
  err << format_table(summaries);
  return kExitOk;
}

json metrics_json(const MethodUnit& u) {
  return {{"method", u.name()}, {"sloc", u.sloc}, {"tokens", u.token_count}, {"cyclomatic", cyclomatic(u)},
          {"cognitive", cognitive(u)}};
}

int cmd_metrics(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.inputs.empty() || o.inputs.size() > 2) throw ConfigError("metrics takes one method file, or two to compare");
  Sink sink(o.out, out);
  const MethodUnit a = parse_method(read_text(o.inputs[0]));
  if (o.inputs.size() == 1) {
    sink.line(metrics_json(a));
    sink.stream().flush();
    err << a.name() << ": sloc " << a.sloc << ", tokens " << a.token_count << ", cyclomatic " << cyclomatic(a)
        << ", cognitive " << cognitive(a) << "\n";
    return kExitOk;
  }
  const MethodUnit b = parse_method(read_text(o.inputs[1]));
  const MetricsDelta d = quality_delta(a, b);
  const auto pair = [](const MetricPair& p) {
    json j = {{"before", p.before}, {"after", p.after}};
    j["reduction"] = p.reduction() ? json(*p.reduction()) : json(nullptr);
    return j;
  };
  sink.line({{"sloc", pair(d.sloc)}, {"tokens", pair(d.tokens)}, {"cyclomatic", pair(d.cyclomatic)},
             {"cognitive", pair(d.cognitive)}, {"smaller", is_smaller(b, a)}});
  sink.stream().flush();
  err << "sloc " << d.sloc.before << " -> " << d.sloc.after << ", tokens " << d.tokens.before << " -> "
      << d.tokens.after << ", cyclomatic " << d.cyclomatic.before << " -> " << d.cyclomatic.after << ", cognitive "
      << d.cognitive.before << " -> " << d.cognitive.after << "\n";
  return kExitOk;
}

int cmd_rules(const Options& o, std::ostream& out, std::ostream& err) {
  Sink sink(o.out, out);
  if (o.inputs.empty()) {
    for (const RuleInfo& r : rule_table()) {
      sink.line({{"code", r.code}, {"title", r.title}, {"description", r.description}, {"executable", r.executable},
                 {"file_scope", r.file_scope}});
    }
    sink.stream().flush();
    err << rule_table().size() << " rule(s)\n";
    return kExitOk;
  }
  for (const std::string& path : o.inputs) {
    const MethodUnit u = parse_method(read_text(path));
    for (const Rewrite& rw : applicable_rules(u)) {
      sink.line({{"input", path}, {"rule", rw.rule}, {"begin", rw.target.begin}, {"end", rw.target.end},
                 {"replacement", rw.replacement}, {"evidence", rw.evidence}});
    }
  }
  sink.stream().flush();
  return kExitOk;
}

std::vector<std::string> config_strings(const json& v) {
  std::vector<std::string> out;
  if (v.is_array()) {
    for (const json& e : v) {
      auto inner = config_strings(e);
      out.insert(out.end(), inner.begin(), inner.end());
    }
  } else if (v.is_string()) {
    out.push_back(v.get<std::string>());
  } else if (v.is_object() || v.is_null()) {
    throw ConfigError("unsupported config value " + v.dump());
  } else {
    out.push_back(v.dump());
  }
  return out;
}

// Fills options still unset after the command line and environment.
void apply_config_table(CLI::App& app, const json& table) {
  if (!table.is_object()) return;
  for (CLI::Option* opt : app.get_options()) {
    if (opt->count() > 0 || opt->get_configurable() == false) continue;
    std::string key = opt->get_single_name();
    if (key.empty() || key == "help" || key == "config") continue;
    std::string alt = key;
    std::replace(alt.begin(), alt.end(), '-', '_');
    const json* v = table.contains(key) ? &table[key] : table.contains(alt) ? &table[alt] : nullptr;
    if (!v || v->is_object()) continue;
    opt->add_result(config_strings(*v));
    opt->run_callback();
  }
}

void apply_config(CLI::App& app, const std::string& path) {
  const json doc = load_config_file(path);
  apply_config_table(app, doc);
  for (CLI::App* sub : app.get_subcommands()) {
    if (doc.contains(sub->get_name())) apply_config_table(*sub, doc[sub->get_name()]);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Program simplification engine and validation harness for Java methods", "simplikit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string config_path;
  app.add_option("--config", config_path, "Run configuration (TOML); flags and SIMPLIKIT_* variables override it")
      ->envname("SIMPLIKIT_CONFIG");
  app.add_option("--registry", o.registry, "Backend registry file ([backends.<id>] tables)")->envname("SIMPLIKIT_REGISTRY");
  app.add_option("--out", o.out, "Write machine-readable output here instead of stdout")->envname("SIMPLIKIT_OUT");
  app.add_option("--workers", o.workers, "Parallel validations / oracle calls")
      ->envname("SIMPLIKIT_WORKERS")
      ->check(CLI::Range(1, 256));

  const auto project_flags = [&o](CLI::App* sub) {
    sub->add_option("--project", o.project, "Project config (TOML/JSON)")->envname("SIMPLIKIT_PROJECT");
    sub->add_option("--file", o.file, "Source file of the method, relative to the project root")->envname("SIMPLIKIT_FILE");
    sub->add_option("--method", o.method, "Method name or qualified name")->envname("SIMPLIKIT_METHOD");
  };

  CLI::App* simplify = app.add_subcommand("simplify", "Generate, filter, rank and optionally validate candidates");
  simplify->add_option("--backend", o.backend, "Backend id")->envname("SIMPLIKIT_BACKEND");
  simplify->add_option("--beam", o.beam, "Beam size (1..64)")->envname("SIMPLIKIT_BEAM");
  simplify->add_option("--max-len", o.max_len, "Maximum candidate length in tokens")->envname("SIMPLIKIT_MAX_LEN");
  project_flags(simplify);
  simplify->add_option("--dataset", o.dataset, "Dataset JSONL; one output line per record")->envname("SIMPLIKIT_DATASET");
  simplify->add_flag("--localized", o.localized, "Feed localized_original from the dataset")->envname("SIMPLIKIT_LOCALIZED");
  simplify->add_option("--inject-identity", o.inject_identity, "Add N identity candidates before filtering")
      ->envname("SIMPLIKIT_INJECT_IDENTITY");
  simplify->add_option("--candidate", o.candidate_files, "Extra candidate method file, ranked with the backend's")
      ->check(CLI::ExistingFile);
  simplify->add_flag("--no-validate", o.no_validate, "Skip validation even with --project");
  simplify->add_option("inputs", o.inputs, "Method files (plain or localized)");

  CLI::App* reduce = app.add_subcommand("reduce", "Delta-debugging reduction driven by the project's tests");
  project_flags(reduce);
  reduce->add_option("--granularity", o.granularity, "statement or line")->envname("SIMPLIKIT_GRANULARITY");

  CLI::App* validate = app.add_subcommand("validate", "Validate candidate method files in rank order");
  project_flags(validate);
  validate->add_option("inputs", o.inputs, "Candidate method files")->required();

  CLI::App* mine = app.add_subcommand("mine", "Extract simplification pairs from git history or a commit dump");
  mine->add_option("--git", o.git, "Local git checkout")->envname("SIMPLIKIT_GIT");
  mine->add_option("--dump", o.dump, "Commit dump JSONL")->envname("SIMPLIKIT_DUMP");
  mine->add_option("--project-id", o.project_id, "Project id for a single-project repository");
  mine->add_option("--project-depth", o.project_depth, "Leading path components naming the project");
  mine->add_option("--token-cap", o.token_cap, "Maximum significant tokens per side")->envname("SIMPLIKIT_TOKEN_CAP");
  mine->add_option("--project", o.project, "Project config used to mark records valid")->envname("SIMPLIKIT_PROJECT");

  CLI::App* split_cmd = app.add_subcommand("split", "Assign project-level 8:1:1 splits");
  split_cmd->add_option("--seed", o.seed, "Split seed")->envname("SIMPLIKIT_SEED");
  split_cmd->add_option("inputs", o.inputs, "Dataset JSONL")->required();

  CLI::App* eval = app.add_subcommand("eval", "Score predictions against ground truth");
  eval->add_option("--pred", o.pred, "Predictions JSONL (simplify output)")->envname("SIMPLIKIT_PRED");
  eval->add_option("--gold", o.gold, "Dataset JSONL")->envname("SIMPLIKIT_GOLD");

  CLI::App* metrics = app.add_subcommand("metrics", "SLOC, tokens, cyclomatic and cognitive complexity");
  metrics->add_option("inputs", o.inputs, "One method file, or original and simplified")->required();

  CLI::App* rules = app.add_subcommand("rules", "List the taxonomy, or rules applicable to method files");
  rules->add_option("inputs", o.inputs, "Method files");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (!config_path.empty()) apply_config(app, config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }

  try {
    if (*simplify) return cmd_simplify(o, out, err);
    if (*reduce) return cmd_reduce(o, out, err);
    if (*validate) return cmd_validate(o, out, err);
    if (*mine) return cmd_mine(o, out, err);
    if (*split_cmd) return cmd_split(o, out, err);
    if (*eval) return cmd_eval(o, out, err);
    if (*metrics) return cmd_metrics(o, out, err);
    if (*rules) return cmd_rules(o, out, err);
  } catch (const BackendError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == "unknown-backend" ? kExitBadConfig : kExitBackendFailure;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  } catch (const ReductionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const ParseError& e) {
    err << "error: input is not a parseable method: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const MalformedMarkers& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  return kExitBadConfig;
}

}  // namespace simplikit
