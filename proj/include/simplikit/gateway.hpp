#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simplikit/reducer.hpp"
#include "simplikit/syntax.hpp"

namespace simplikit {

inline constexpr std::string_view kPromptPrefix = "Simplify the following java method: ";
inline constexpr std::string_view kPromptSuffix = ", the simplified version is: ";

/// The generation prompt with [X] filled in and [Y] left empty.
std::string build_prompt(std::string_view method_text);

struct GeneratorRequest {
  /// Raw method text, or localized text carrying marker tokens.
  std::string input;
  int beam_size = 10;
  int max_len = 512;
  std::string backend = "catalog";

  /// Throws ConfigError when beam size or max length is out of range.
  void check() const;
};

enum class Provenance { Rules, Deletion, Neural };
std::string_view to_string(Provenance p);

struct Candidate {
  std::string text;
  std::optional<double> score;
  Provenance provenance = Provenance::Rules;
  std::vector<std::string> rules;
  /// Reducer backend only.
  std::optional<ReductionTrace> trace;
};

struct CandidateSet {
  std::vector<Candidate> candidates;
};

nlohmann::json to_json(const Candidate& c);

class Backend {
 public:
  virtual ~Backend() = default;
  /// Candidates in the backend's own order. May return fewer than beam size.
  virtual CandidateSet generate(const GeneratorRequest& request) = 0;
};

/// Breadth-first rule rewrites. Localized input restricts rewrites to marked lines.
class CatalogBackend : public Backend {
 public:
  CandidateSet generate(const GeneratorRequest& request) override;
};

/// ddmin with an oracle built per method.
class ReducerBackend : public Backend {
 public:
  using OracleFactory = std::function<Oracle(const MethodUnit&)>;
  explicit ReducerBackend(OracleFactory factory, ReduceOptions options = {})
      : factory_(std::move(factory)), options_(options) {}
  CandidateSet generate(const GeneratorRequest& request) override;

 private:
  OracleFactory factory_;
  ReduceOptions options_;
};

/// HTTP JSON client: POST {base}/v1/generate with {prompt, beam_size, max_len},
/// expecting {candidates: [{text, score}]}.
class RemoteBackend : public Backend {
 public:
  explicit RemoteBackend(std::string base_url, std::chrono::duration<double> timeout = std::chrono::seconds(120));
  CandidateSet generate(const GeneratorRequest& request) override;
  const std::string& base_url() const noexcept { return base_url_; }

 private:
  std::string base_url_;
  std::chrono::duration<double> timeout_;
};

/// Parses a /v1/generate response body. Throws BackendError("backend-protocol-error").
CandidateSet parse_generate_response(const std::string& body);

class Gateway {
 public:
  void add(std::string id, std::shared_ptr<Backend> backend);
  bool has(const std::string& id) const { return backends_.count(id) > 0; }
  std::vector<std::string> ids() const;

  /// Candidates from the named backend, deduplicated by significant tokens
  /// and truncated to the beam size. Throws BackendError("unknown-backend").
  CandidateSet generate(const GeneratorRequest& request) const;

 private:
  std::map<std::string, std::shared_ptr<Backend>> backends_;
};

/// Registry from a config document: [backends.<id>] with `builtin` (catalog |
/// reducer) or `url` (+ optional `timeout`). The catalog backend is always present.
Gateway gateway_from_config(const nlohmann::json& doc, ReducerBackend::OracleFactory oracle_factory = {});

/// Drops candidates whose significant tokens equal the original's.
CandidateSet filter_unaltered(const CandidateSet& set, const MethodUnit& original);

/// Stable order: score desc (missing last), SLOC reduction desc, token
/// reduction desc, then text.
CandidateSet rank(const CandidateSet& set, const MethodUnit& original);

}  // namespace simplikit
