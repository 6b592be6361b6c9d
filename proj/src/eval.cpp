#include "simplikit/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "simplikit/catalog.hpp"
#include "simplikit/error.hpp"
#include "simplikit/lexer.hpp"

namespace simplikit {

bool perfect_prediction(std::string_view candidate, std::string_view ground_truth) {
  return token_key(candidate) == token_key(ground_truth);
}

namespace {

using Gram = std::vector<std::string>;

std::map<Gram, int> grams(const std::vector<std::string>& tokens, std::size_t n) {
  std::map<Gram, int> out;
  if (tokens.size() < n) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) ++out[Gram(tokens.begin() + i, tokens.begin() + i + n)];
  return out;
}

std::string signature(const SyntaxTree& t, NodeId id, int depth) {
  std::string s(to_string(t[id].kind));
  if (depth <= 1 || t[id].children.empty()) return s;
  s += '(';
  bool first = true;
  for (NodeId c : t[id].children) {
    if (!first) s += ',';
    first = false;
    s += signature(t, c, depth - 1);
  }
  return s + ')';
}

std::map<std::string, int> signatures(const MethodUnit& u) {
  std::map<std::string, int> out;
  for (NodeId id = 0; id < u.tree->size(); ++id) ++out[signature(*u.tree, id, 3)];
  return out;
}

}  // namespace

double ngram_match(const std::vector<std::string>& cand, const std::vector<std::string>& ref, double keyword_weight) {
  if (cand.empty() || ref.empty()) return cand.empty() && ref.empty() ? 1.0 : 0.0;
  double log_sum = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto c = grams(cand, n);
    const auto r = grams(ref, n);
    double matched = 0;
    double total = 0;
    for (const auto& [g, count] : c) {
      const double w = (n == 1 && is_java_keyword(g[0])) ? keyword_weight : 1.0;
      const auto it = r.find(g);
      matched += w * std::min(count, it == r.end() ? 0 : it->second);
      total += w * count;
    }
    double p;
    if (n == 1) {
      if (matched == 0) return 0.0;
      p = matched / total;
    } else {
      p = (matched + 1) / (total + 1);
    }
    log_sum += std::log(p) / 4;
  }
  const double c = static_cast<double>(cand.size());
  const double r = static_cast<double>(ref.size());
  const double bp = c >= r ? 1.0 : std::exp(1 - r / c);
  return bp * std::exp(log_sum);
}

double subtree_match(std::string_view candidate, std::string_view reference) {
  std::map<std::string, int> c, r;
  try {
    c = signatures(parse_method(candidate));
    r = signatures(parse_method(reference));
  } catch (const ParseError&) {
    return 0.0;
  }
  int matched = 0;
  int total = 0;
  for (const auto& [sig, count] : r) {
    const auto it = c.find(sig);
    matched += std::min(count, it == c.end() ? 0 : it->second);
    total += count;
  }
  return total == 0 ? 0.0 : static_cast<double>(matched) / total;
}

SimScore simscore(std::string_view candidate, std::string_view ground_truth) {
  const auto c = significant_tokens(candidate);
  const auto r = significant_tokens(ground_truth);
  SimScore s;
  s.ngram = ngram_match(c, r, 1.0);
  s.weighted_ngram = ngram_match(c, r, 5.0);
  s.syntax = subtree_match(candidate, ground_truth);
  s.total = (s.ngram + s.weighted_ngram + s.syntax) / 3.0;
  return s;
}

EvalRow evaluate(std::string record_id, std::string backend, std::string_view prediction,
                 std::string_view ground_truth, std::optional<std::string_view> original) {
  EvalRow row;
  row.record_id = std::move(record_id);
  row.backend = std::move(backend);
  row.perfect = perfect_prediction(prediction, ground_truth);
  // equal tokens score 1 even when neither side parses
  row.sim = row.perfect ? SimScore{1.0, 1.0, 1.0, 1.0} : simscore(prediction, ground_truth);
  if (original) {
    try {
      const MethodUnit o = parse_method(*original);
      const MethodUnit p = parse_method(prediction);
      row.metrics = quality_delta(o, p);
      row.rules = classify(o, p);
    } catch (const ParseError&) {
    }
  }
  return row;
}

Stats describe(std::vector<double> values) {
  Stats s;
  s.n = values.size();
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  s.median = s.n % 2 ? values[s.n / 2] : (values[s.n / 2 - 1] + values[s.n / 2]) / 2;
  if (s.n >= 2 && values.front() != values.back()) {
    double sq = 0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stdev = std::sqrt(sq / static_cast<double>(s.n - 1));
  }
  return s;
}

namespace {

DeltaStats deltas(const std::vector<const EvalRow*>& rows) {
  std::vector<double> sl, cc, cg;
  for (const EvalRow* r : rows) {
    if (!r->metrics) continue;
    sl.push_back(r->metrics->sloc.delta());
    cc.push_back(r->metrics->cyclomatic.delta());
    cg.push_back(r->metrics->cognitive.delta());
  }
  return {describe(sl), describe(cc), describe(cg)};
}

std::optional<double> rate(const std::vector<const EvalRow*>& rows, std::optional<bool> EvalRow::*field) {
  std::size_t known = 0, yes = 0;
  for (const EvalRow* r : rows) {
    if (!(r->*field)) continue;
    ++known;
    if (*(r->*field)) ++yes;
  }
  if (known == 0) return std::nullopt;
  return static_cast<double>(yes) / static_cast<double>(known);
}

nlohmann::json to_json(const Stats& s) {
  return {{"n", s.n}, {"mean", s.mean}, {"median", s.median}, {"stdev", s.stdev}};
}

nlohmann::json to_json(const DeltaStats& d) {
  return {{"sloc", to_json(d.sloc)}, {"cyclomatic", to_json(d.cyclomatic)}, {"cognitive", to_json(d.cognitive)}};
}

nlohmann::json optional_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

std::vector<BackendSummary> aggregate(const std::vector<EvalRow>& rows) {
  std::map<std::string, std::vector<const EvalRow*>> by_backend;
  for (const EvalRow& r : rows) by_backend[r.backend].push_back(&r);
  std::vector<BackendSummary> out;
  for (const auto& [backend, group] : by_backend) {
    BackendSummary s;
    s.backend = backend;
    s.rows = group.size();
    std::vector<double> sims;
    std::vector<const EvalRow*> perfect, equivalent;
    for (const EvalRow* r : group) {
      sims.push_back(r->sim.total);
      if (r->perfect) perfect.push_back(r);
      if (r->test_equivalent.value_or(false)) equivalent.push_back(r);
      for (const std::string& rule : r->rules) ++s.rule_histogram[rule];
    }
    s.perfect = perfect.size();
    s.perfect_ratio = static_cast<double>(s.perfect) / static_cast<double>(s.rows);
    s.sim = describe(sims);
    s.compile_rate = rate(group, &EvalRow::compiled);
    s.test_equivalence_rate = rate(group, &EvalRow::test_equivalent);
    s.perfect_deltas = deltas(perfect);
    s.equivalent_deltas = deltas(equivalent);
    out.push_back(std::move(s));
  }
  return out;
}

nlohmann::json to_json(const EvalRow& r) {
  nlohmann::json j = {
      {"record_id", r.record_id},
      {"backend", r.backend},
      {"perfect_prediction", r.perfect},
      {"simscore",
       {{"total", r.sim.total}, {"ngram", r.sim.ngram}, {"weighted_ngram", r.sim.weighted_ngram}, {"syntax", r.sim.syntax}}},
      {"compiled", r.compiled ? nlohmann::json(*r.compiled) : nlohmann::json(nullptr)},
      {"test_equivalent", r.test_equivalent ? nlohmann::json(*r.test_equivalent) : nlohmann::json(nullptr)},
      {"rules", r.rules},
  };
  if (r.metrics) {
    j["metrics"] = {{"sloc", {r.metrics->sloc.before, r.metrics->sloc.after}},
                    {"tokens", {r.metrics->tokens.before, r.metrics->tokens.after}},
                    {"cyclomatic", {r.metrics->cyclomatic.before, r.metrics->cyclomatic.after}},
                    {"cognitive", {r.metrics->cognitive.before, r.metrics->cognitive.after}}};
  }
  return j;
}

nlohmann::json to_json(const BackendSummary& s) {
  return {
      {"backend", s.backend},
      {"rows", s.rows},
      {"perfect_predictions", s.perfect},
      {"perfect_ratio", s.perfect_ratio},
      {"simscore", to_json(s.sim)},
      {"compile_rate", optional_json(s.compile_rate)},
      {"test_equivalence_rate", optional_json(s.test_equivalence_rate)},
      {"rule_histogram", s.rule_histogram},
      {"perfect_deltas", to_json(s.perfect_deltas)},
      {"equivalent_deltas", to_json(s.equivalent_deltas)},
      {"similarity_components", {"ngram", "weighted_ngram", "syntax"}},
      {"dataflow_component", "omitted"},
  };
}

std::string format_table(const std::vector<BackendSummary>& summaries) {
  std::ostringstream out;
  out << "similarity = mean of n-gram, keyword-weighted n-gram, subtree match (dataflow match omitted)\n";
  const auto pct = [](std::optional<double> v) {
    if (!v) return std::string("-");
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << *v * 100 << "%";
    return s.str();
  };
  const auto num = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << v;
    return s.str();
  };
  std::vector<std::vector<std::string>> table = {
      {"backend", "rows", "PP #", "PP %", "sim mean", "sim median", "sim stdev", "compiled", "test-equiv"}};
  for (const BackendSummary& s : summaries) {
    table.push_back({s.backend, std::to_string(s.rows), std::to_string(s.perfect), pct(s.perfect_ratio), num(s.sim.mean),
                     num(s.sim.median), num(s.sim.stdev), pct(s.compile_rate), pct(s.test_equivalence_rate)});
  }
  std::vector<std::size_t> width(table[0].size(), 0);
  for (const auto& row : table)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      if (i == 0) out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
      else out << std::right << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << "\n";
  }
  for (const BackendSummary& s : summaries) {
    if (s.rule_histogram.empty()) continue;
    out << s.backend << " rules:";
    for (const auto& [rule, count] : s.rule_histogram) out << " " << rule << "=" << count;
    out << "\n";
  }
  return out.str();
}

}  // namespace simplikit
