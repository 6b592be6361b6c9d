#include "simplikit/gateway.hpp"

#include <algorithm>
#include <set>

#include <httplib.h>

#include "simplikit/catalog.hpp"
#include "simplikit/error.hpp"
#include "simplikit/lexer.hpp"
#include "simplikit/localization.hpp"

namespace simplikit {

std::string build_prompt(std::string_view method_text) {
  std::string out(kPromptPrefix);
  out += method_text;
  out += kPromptSuffix;
  return out;
}

void GeneratorRequest::check() const {
  if (beam_size < 1 || beam_size > 64) throw ConfigError("beam size must be in 1..64, got " + std::to_string(beam_size));
  if (max_len < 1) throw ConfigError("max length must be positive");
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Rules: return "rules";
    case Provenance::Deletion: return "deletion";
    case Provenance::Neural: return "neural";
  }
  return "?";
}

nlohmann::json to_json(const Candidate& c) {
  nlohmann::json j = {{"text", c.text}, {"provenance", to_string(c.provenance)}, {"rules", c.rules}};
  j["score"] = c.score ? nlohmann::json(*c.score) : nlohmann::json(nullptr);
  if (c.trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const TraceStep& s : c.trace->steps) steps.push_back({{"kept", s.kept}, {"verdict", s.verdict}});
    j["trace"] = {{"steps", steps}, {"final_units", c.trace->final_units}, {"oracle_calls", c.trace->oracle_calls}};
  }
  return j;
}

namespace {

bool has_markers(std::string_view text) {
  return text.find(kOriginalOpen) != std::string_view::npos || text.find(kSimplifiedOpen) != std::string_view::npos;
}

}  // namespace

CandidateSet CatalogBackend::generate(const GeneratorRequest& request) {
  EnumerateOptions options;
  std::string source = request.input;
  if (has_markers(source)) {
    options.marked_lines = marked_lines(source);
    source = strip_markers(source);
  }
  const MethodUnit unit = parse_method(source);
  const int budget = std::max(4 * request.beam_size, 32);
  CandidateSet set;
  for (const Derivation& d : enumerate_derivations(unit, budget, options)) {
    if (d.unit.token_count > request.max_len) continue;
    set.candidates.push_back({print(d.unit), std::nullopt, Provenance::Rules, d.rules, std::nullopt});
  }
  return rank(set, unit);
}

CandidateSet ReducerBackend::generate(const GeneratorRequest& request) {
  const std::string source = has_markers(request.input) ? strip_markers(request.input) : request.input;
  const MethodUnit unit = parse_method(source);
  if (!factory_) throw ConfigError("reducer backend needs a test oracle (project config)");
  const ReductionResult r = ddmin_reduce(unit, factory_(unit), options_);
  CandidateSet set;
  Candidate c{r.unit.source, std::nullopt, Provenance::Deletion, {}, r.trace};
  set.candidates.push_back(std::move(c));
  return set;
}

RemoteBackend::RemoteBackend(std::string base_url, std::chrono::duration<double> timeout)
    : base_url_(std::move(base_url)), timeout_(timeout) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

CandidateSet parse_generate_response(const std::string& body) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw BackendError("backend-protocol-error", std::string("response is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("candidates") || !j["candidates"].is_array()) {
    throw BackendError("backend-protocol-error", "response lacks a candidates array");
  }
  CandidateSet set;
  for (const auto& c : j["candidates"]) {
    if (!c.is_object() || !c.contains("text") || !c["text"].is_string()) {
      throw BackendError("backend-protocol-error", "candidate lacks a text string");
    }
    Candidate out;
    out.text = c["text"].get<std::string>();
    out.provenance = Provenance::Neural;
    if (c.contains("score") && !c["score"].is_null()) {
      if (!c["score"].is_number()) throw BackendError("backend-protocol-error", "candidate score is not a number");
      out.score = c["score"].get<double>();
    }
    set.candidates.push_back(std::move(out));
  }
  return set;
}

CandidateSet RemoteBackend::generate(const GeneratorRequest& request) {
  httplib::Client client(base_url_);
  const auto usec = std::chrono::duration_cast<std::chrono::microseconds>(timeout_).count();
  client.set_connection_timeout(usec / 1000000, usec % 1000000);
  client.set_read_timeout(usec / 1000000, usec % 1000000);
  client.set_write_timeout(usec / 1000000, usec % 1000000);
  const nlohmann::json body = {
      {"prompt", build_prompt(request.input)}, {"beam_size", request.beam_size}, {"max_len", request.max_len}};
  const auto start = std::chrono::steady_clock::now();
  const httplib::Result res = client.Post("/v1/generate", body.dump(), "application/json");
  if (!res) {
    const httplib::Error err = res.error();
    const bool slow = std::chrono::steady_clock::now() - start >= timeout_ * 0.9;
    if (err == httplib::Error::ConnectionTimeout || (err == httplib::Error::Read && slow)) {
      throw BackendError("timeout", base_url_ + " did not answer in time");
    }
    if (err == httplib::Error::Connection) throw BackendError("backend-unreachable", base_url_ + ": " + httplib::to_string(err));
    throw BackendError("backend-protocol-error", base_url_ + ": " + httplib::to_string(err));
  }
  if (res->status != 200) {
    throw BackendError("backend-protocol-error", base_url_ + " answered HTTP " + std::to_string(res->status));
  }
  return parse_generate_response(res->body);
}

void Gateway::add(std::string id, std::shared_ptr<Backend> backend) { backends_[std::move(id)] = std::move(backend); }

std::vector<std::string> Gateway::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : backends_) out.push_back(id);
  return out;
}

CandidateSet Gateway::generate(const GeneratorRequest& request) const {
  request.check();
  const auto it = backends_.find(request.backend);
  if (it == backends_.end()) throw BackendError("unknown-backend", "no backend '" + request.backend + "'");
  const CandidateSet raw = it->second->generate(request);
  CandidateSet out;
  std::set<std::string> seen;
  for (const Candidate& c : raw.candidates) {
    if (static_cast<int>(out.candidates.size()) >= request.beam_size) break;
    if (!seen.insert(token_key(c.text)).second) continue;
    out.candidates.push_back(c);
  }
  return out;
}

Gateway gateway_from_config(const nlohmann::json& doc, ReducerBackend::OracleFactory oracle_factory) {
  Gateway g;
  g.add("catalog", std::make_shared<CatalogBackend>());
  g.add("reducer", std::make_shared<ReducerBackend>(oracle_factory));
  if (!doc.is_object() || !doc.contains("backends")) return g;
  const auto& backends = doc.at("backends");
  if (!backends.is_object()) throw ConfigError("[backends] must be a table");
  for (const auto& [id, entry] : backends.items()) {
    if (!entry.is_object()) throw ConfigError("backend '" + id + "' must be a table");
    if (entry.contains("url")) {
      if (!entry["url"].is_string()) throw ConfigError("backend '" + id + "' url must be a string");
      const double timeout = entry.value("timeout", 120.0);
      if (!(timeout > 0)) throw ConfigError("backend '" + id + "' timeout must be positive");
      g.add(id, std::make_shared<RemoteBackend>(entry["url"].get<std::string>(), std::chrono::duration<double>(timeout)));
    } else if (entry.contains("builtin")) {
      const std::string kind = entry.value("builtin", "");
      if (kind == "catalog") g.add(id, std::make_shared<CatalogBackend>());
      else if (kind == "reducer") g.add(id, std::make_shared<ReducerBackend>(oracle_factory));
      else throw ConfigError("backend '" + id + "': unknown builtin '" + kind + "'");
    } else {
      throw ConfigError("backend '" + id + "' needs `url` or `builtin`");
    }
  }
  return g;
}

CandidateSet filter_unaltered(const CandidateSet& set, const MethodUnit& original) {
  const std::string key = token_key(original.source);
  CandidateSet out;
  for (const Candidate& c : set.candidates)
    if (token_key(c.text) != key) out.candidates.push_back(c);
  return out;
}

CandidateSet rank(const CandidateSet& set, const MethodUnit& original) {
  struct Keyed {
    const Candidate* c;
    int sloc_cut;
    int token_cut;
  };
  std::vector<Keyed> keyed;
  for (const Candidate& c : set.candidates) {
    keyed.push_back({&c, original.sloc - sloc(c.text), original.token_count - token_count(c.text)});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.c->score.has_value() != b.c->score.has_value()) return a.c->score.has_value();
    if (a.c->score && *a.c->score != *b.c->score) return *a.c->score > *b.c->score;
    if (a.sloc_cut != b.sloc_cut) return a.sloc_cut > b.sloc_cut;
    if (a.token_cut != b.token_cut) return a.token_cut > b.token_cut;
    return a.c->text < b.c->text;
  });
  CandidateSet out;
  for (const Keyed& k : keyed) out.candidates.push_back(*k.c);
  return out;
}

}  // namespace simplikit
