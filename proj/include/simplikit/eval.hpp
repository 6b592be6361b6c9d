#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "simplikit/metrics.hpp"

namespace simplikit {

/// Equal significant-token sequences.
bool perfect_prediction(std::string_view candidate, std::string_view ground_truth);

struct SimScore {
  double ngram = 0;
  double weighted_ngram = 0;
  double syntax = 0;
  double total = 0;  // mean of the three
};

/// BLEU-4 over significant tokens: clipped precisions, add-one smoothing for
/// orders 2-4, geometric mean, brevity penalty. With `keyword_weight` > 1 the
/// unigram counts of Java keywords are scaled by that weight.
double ngram_match(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
                   double keyword_weight = 1.0);

/// Fraction of the reference's depth-3 subtree signatures found in the
/// candidate (clipped multiset match). 0 when either side fails to parse.
double subtree_match(std::string_view candidate, std::string_view reference);

SimScore simscore(std::string_view candidate, std::string_view ground_truth);

struct EvalRow {
  std::string record_id;
  std::string backend;
  bool perfect = false;
  SimScore sim;
  std::optional<bool> compiled;
  std::optional<bool> test_equivalent;
  std::vector<std::string> rules;
  std::optional<MetricsDelta> metrics;  // original vs prediction
};

/// Scores one prediction. `original` enables rule classification and metric deltas.
EvalRow evaluate(std::string record_id, std::string backend, std::string_view prediction,
                 std::string_view ground_truth, std::optional<std::string_view> original = std::nullopt);

struct Stats {
  std::size_t n = 0;
  double mean = 0;
  double median = 0;
  double stdev = 0;  // sample standard deviation, 0 when n < 2
};

Stats describe(std::vector<double> values);

struct DeltaStats {
  Stats sloc;
  Stats cyclomatic;
  Stats cognitive;
};

struct BackendSummary {
  std::string backend;
  std::size_t rows = 0;
  std::size_t perfect = 0;
  double perfect_ratio = 0;
  Stats sim;
  std::optional<double> compile_rate;
  std::optional<double> test_equivalence_rate;
  std::map<std::string, std::size_t> rule_histogram;
  DeltaStats perfect_deltas;
  DeltaStats equivalent_deltas;
};

/// Per-backend tables, ordered by backend id.
std::vector<BackendSummary> aggregate(const std::vector<EvalRow>& rows);

nlohmann::json to_json(const EvalRow& row);
nlohmann::json to_json(const BackendSummary& summary);

/// Aligned-column text rendering of the summaries.
std::string format_table(const std::vector<BackendSummary>& summaries);

}  // namespace simplikit
