#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "simplikit/error.hpp"
#include "simplikit/syntax.hpp"

namespace simplikit {

enum class DeletionKind { Statement, Import, Line };
std::string_view to_string(DeletionKind kind);

struct DeletionUnit {
  DeletionKind kind = DeletionKind::Statement;
  Span span;
  std::size_t index = 0;
};

enum class Granularity { Statement, Line };

/// Deletable regions of the method body, ordered and non-overlapping. In
/// statement mode these are the top-level body statements, except the final
/// return or throw of a non-void method.
std::vector<DeletionUnit> deletion_units(const MethodUnit& unit, Granularity granularity = Granularity::Statement);

/// Source text with every unit not listed in `kept` removed.
std::string render_subset(const MethodUnit& unit, const std::vector<DeletionUnit>& units,
                          const std::vector<std::size_t>& kept);

/// Test-equivalence predicate. `isolation_safe` allows concurrent calls.
struct Oracle {
  std::function<bool(const MethodUnit&)> test;
  bool isolation_safe = false;
};

struct TraceStep {
  std::vector<std::size_t> kept;  // unit indices
  bool verdict = false;
  bool cached = false;  // answered from the memo or by a parse failure
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  std::vector<std::size_t> final_units;
  std::size_t oracle_calls = 0;
};

/// Oracle failure or unmet precondition, with the trace recorded so far.
class ReductionError : public Error {
 public:
  ReductionError(const std::string& what, ReductionTrace trace) : Error(what), trace_(std::move(trace)) {}
  const ReductionTrace& trace() const noexcept { return trace_; }

 private:
  ReductionTrace trace_;
};

struct ReduceOptions {
  Granularity granularity = Granularity::Statement;
  std::size_t workers = 1;
};

struct ReductionResult {
  MethodUnit unit;
  ReductionTrace trace;
  std::vector<DeletionUnit> units;
};

/// Classic ddmin over deletion units. The result is 1-minimal: no single
/// remaining unit can be dropped without failing the oracle.
ReductionResult ddmin_reduce(const MethodUnit& unit, const Oracle& oracle, const ReduceOptions& options = {});

/// Upper bound on oracle calls made by ddmin_reduce for `n` units.
std::size_t ddmin_call_bound(std::size_t n);

/// Fewest units any passing subset keeps. Exhaustive; n must be <= 16.
std::size_t brute_force_minimum(const MethodUnit& unit, const Oracle& oracle,
                                Granularity granularity = Granularity::Statement);

/// Ground truth when it is reachable from `original` by deleting lines only.
std::optional<MethodUnit> idd(const MethodUnit& original, const MethodUnit& ground_truth);

/// Trimmed text of each significant line, in order.
std::vector<std::string> normalized_lines(std::string_view text);

}  // namespace simplikit
