#include "simplikit/reducer.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>

#include "simplikit/diff.hpp"
#include "simplikit/lexer.hpp"

namespace simplikit {

std::string_view to_string(DeletionKind kind) {
  switch (kind) {
    case DeletionKind::Statement: return "statement";
    case DeletionKind::Import: return "import";
    case DeletionKind::Line: return "line";
  }
  return "?";
}

namespace {

Span whole_lines(const std::string& text, Span s) {
  std::size_t b = s.begin;
  while (b > 0 && (text[b - 1] == ' ' || text[b - 1] == '\t')) --b;
  if (b != 0 && text[b - 1] != '\n') return s;
  std::size_t e = s.end;
  while (e < text.size() && (text[e] == ' ' || text[e] == '\t' || text[e] == '\r')) ++e;
  if (e < text.size() && text[e] != '\n') return s;
  if (e < text.size()) ++e;
  return {b, e};
}

std::vector<DeletionUnit> statement_units(const MethodUnit& unit) {
  std::vector<DeletionUnit> out;
  const NodeId body = unit.body();
  if (body == kNoNode) return out;
  std::vector<NodeId> stmts = unit.tree->children(body, Role::Body);
  if (!stmts.empty() && !unit.returns_void()) {
    const NodeKind last = unit.node(stmts.back()).kind;
    if (last == NodeKind::Return || last == NodeKind::Throw) stmts.pop_back();
  }
  for (NodeId s : stmts) {
    out.push_back({DeletionKind::Statement, whole_lines(unit.source, unit.node(s).span), out.size()});
  }
  return out;
}

std::vector<DeletionUnit> line_units(const MethodUnit& unit) {
  std::vector<DeletionUnit> out;
  const NodeId body = unit.body();
  if (body == kNoNode) return out;
  const Span b = unit.node(body).span;
  const std::string& text = unit.source;
  // Lines strictly between the opening and closing brace lines.
  std::size_t pos = text.find('\n', b.begin);
  while (pos != std::string::npos && pos + 1 < b.end) {
    const std::size_t start = pos + 1;
    std::size_t end = text.find('\n', start);
    // the closing brace line is never deletable
    if (end == std::string::npos || end >= b.end - 1) break;
    if (token_count(std::string_view(text).substr(start, end - start)) > 0) {
      out.push_back({DeletionKind::Line, {start, end + 1}, out.size()});
    }
    pos = end;
  }
  return out;
}

std::optional<MethodUnit> try_parse(const std::string& text) {
  try {
    return parse_method(text);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

class Runner {
 public:
  Runner(const MethodUnit& unit, const Oracle& oracle, const ReduceOptions& opts)
      : unit_(unit), oracle_(oracle), opts_(opts), units_(deletion_units(unit, opts.granularity)) {}

  const std::vector<DeletionUnit>& units() const { return units_; }
  ReductionTrace& trace() { return trace_; }

  // Verdicts for several subsets, in order. Uncached ones may run concurrently.
  std::vector<bool> test_all(const std::vector<std::vector<std::size_t>>& subsets) {
    struct Pending {
      std::size_t slot;
      std::string key;
      MethodUnit candidate;
    };
    std::vector<std::optional<bool>> verdicts(subsets.size());
    std::vector<bool> cached(subsets.size(), true);
    std::vector<Pending> pending;
    std::map<std::string, std::size_t> queued;
    std::vector<std::size_t> alias(subsets.size(), SIZE_MAX);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      const std::string text = render_subset(unit_, units_, subsets[i]);
      std::optional<MethodUnit> cand = try_parse(text);
      if (!cand) {
        verdicts[i] = false;
        continue;
      }
      std::string key = token_key(cand->source);
      if (auto it = memo_.find(key); it != memo_.end()) {
        verdicts[i] = it->second;
      } else if (auto q = queued.find(key); q != queued.end()) {
        alias[i] = q->second;
      } else {
        queued.emplace(key, pending.size());
        pending.push_back({i, std::move(key), std::move(*cand)});
        cached[i] = false;
      }
    }
    std::vector<bool> results(pending.size());
    auto call = [this](const MethodUnit& m) { return oracle_.test(m); };
    try {
      if (oracle_.isolation_safe && opts_.workers > 1 && pending.size() > 1) {
        for (std::size_t start = 0; start < pending.size(); start += opts_.workers) {
          const std::size_t stop = std::min(pending.size(), start + opts_.workers);
          std::vector<std::future<bool>> futures;
          for (std::size_t k = start; k < stop; ++k) {
            futures.push_back(std::async(std::launch::async, call, std::cref(pending[k].candidate)));
          }
          for (std::size_t k = start; k < stop; ++k) {
            ++trace_.oracle_calls;
            results[k] = futures[k - start].get();
          }
        }
      } else {
        for (std::size_t k = 0; k < pending.size(); ++k) {
          ++trace_.oracle_calls;
          results[k] = call(pending[k].candidate);
        }
      }
    } catch (const std::exception& e) {
      throw ReductionError(std::string("oracle-error: ") + e.what(), trace_);
    }
    for (std::size_t k = 0; k < pending.size(); ++k) {
      memo_[pending[k].key] = results[k];
      verdicts[pending[k].slot] = results[k];
    }
    std::vector<bool> out(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      out[i] = alias[i] != SIZE_MAX ? results[alias[i]] : *verdicts[i];
      trace_.steps.push_back({subsets[i], out[i], cached[i]});
    }
    return out;
  }

  bool test(const std::vector<std::size_t>& subset) { return test_all({subset})[0]; }

  // First passing subset by index; evaluates a whole round at once when
  // concurrency is allowed, otherwise stops at the first pass.
  std::optional<std::size_t> first_passing(const std::vector<std::vector<std::size_t>>& subsets) {
    if (oracle_.isolation_safe && opts_.workers > 1) {
      const std::vector<bool> v = test_all(subsets);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) return i;
      return std::nullopt;
    }
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (test(subsets[i])) return i;
    return std::nullopt;
  }

 private:
  const MethodUnit& unit_;
  const Oracle& oracle_;
  ReduceOptions opts_;
  std::vector<DeletionUnit> units_;
  std::map<std::string, bool> memo_;
  ReductionTrace trace_;
};

std::vector<std::vector<std::size_t>> partition(const std::vector<std::size_t>& c, std::size_t n) {
  std::vector<std::vector<std::size_t>> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t stop = start + (c.size() - start) / (n - i);
    parts.emplace_back(c.begin() + start, c.begin() + stop);
    start = stop;
  }
  return parts;
}

std::vector<std::size_t> minus(const std::vector<std::size_t>& c, const std::vector<std::size_t>& d) {
  std::vector<std::size_t> out;
  std::set_difference(c.begin(), c.end(), d.begin(), d.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<DeletionUnit> deletion_units(const MethodUnit& unit, Granularity granularity) {
  return granularity == Granularity::Statement ? statement_units(unit) : line_units(unit);
}

std::string render_subset(const MethodUnit& unit, const std::vector<DeletionUnit>& units,
                          const std::vector<std::size_t>& kept) {
  std::vector<bool> keep(units.size(), false);
  for (std::size_t k : kept) keep.at(k) = true;
  std::string out;
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (keep[i]) continue;
    out.append(unit.source, cursor, units[i].span.begin - cursor);
    cursor = units[i].span.end;
  }
  out.append(unit.source, cursor);
  return out;
}

std::size_t ddmin_call_bound(std::size_t n) { return n * n + 3 * n + 2; }

ReductionResult ddmin_reduce(const MethodUnit& unit, const Oracle& oracle, const ReduceOptions& options) {
  Runner run(unit, oracle, options);
  std::vector<std::size_t> c(run.units().size());
  std::iota(c.begin(), c.end(), 0);
  if (!run.test(c)) throw ReductionError("precondition: oracle rejects the unaltered method", run.trace());

  if (!c.empty() && run.test({})) {
    c.clear();
  }
  std::size_t n = 2;
  while (!c.empty()) {
    n = std::min(n, c.size());
    const auto parts = partition(c, n);
    if (n >= 2) {
      if (auto hit = run.first_passing(parts)) {
        c = parts[*hit];
        n = 2;
        continue;
      }
    }
    std::vector<std::vector<std::size_t>> complements;
    for (const auto& p : parts) complements.push_back(minus(c, p));
    if (auto hit = run.first_passing(complements)) {
      c = complements[*hit];
      n = std::max<std::size_t>(n - 1, 2);
      continue;
    }
    if (n >= c.size()) break;
    n = std::min(n * 2, c.size());
  }

  ReductionResult result{parse_method(render_subset(unit, run.units(), c)), std::move(run.trace()), run.units()};
  result.unit.qualified_name = unit.qualified_name;
  result.unit.file_span = unit.file_span;
  result.trace.final_units = c;
  return result;
}

std::size_t brute_force_minimum(const MethodUnit& unit, const Oracle& oracle, Granularity granularity) {
  const std::vector<DeletionUnit> units = deletion_units(unit, granularity);
  if (units.size() > 16) throw std::invalid_argument("brute_force_minimum: too many units");
  std::size_t best = units.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << units.size()); ++mask) {
    const std::size_t count = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (count >= best) continue;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < units.size(); ++i)
      if (mask & (std::size_t{1} << i)) kept.push_back(i);
    std::optional<MethodUnit> cand = try_parse(render_subset(unit, units, kept));
    if (cand && oracle.test(*cand)) best = count;
  }
  return best;
}

std::vector<std::string> normalized_lines(std::string_view text) {
  std::vector<std::string> out;
  const std::vector<bool> sig = significant_lines(text);
  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size() && i < sig.size(); ++i) {
    if (sig[i]) out.emplace_back(trim(lines[i]));
  }
  return out;
}

std::optional<MethodUnit> idd(const MethodUnit& original, const MethodUnit& ground_truth) {
  const std::vector<std::string> a = normalized_lines(original.source);
  const std::vector<std::string> g = normalized_lines(ground_truth.source);
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size() && j < g.size(); ++i)
    if (a[i] == g[j]) ++j;
  if (j != g.size()) return std::nullopt;
  return ground_truth;
}

}  // namespace simplikit
