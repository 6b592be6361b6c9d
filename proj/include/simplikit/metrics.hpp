#pragma once

#include <optional>
#include <string>

#include "simplikit/syntax.hpp"

namespace simplikit {

/// 1 + decision points: if, for, foreach, while, do, each case value,
/// each catch clause, ternary, && and ||.
int cyclomatic(const MethodUnit& unit);

/// Cognitive complexity with a fixed increment table:
///   if, switch, loops, catch, ternary: +1 plus current nesting depth
///   else-if, else: +1
///   each run of like logical operators: +1
///   labelled break/continue: +1
/// Nesting grows inside the bodies of those structures and inside lambdas.
int cognitive(const MethodUnit& unit);

struct MetricPair {
  int before = 0;
  int after = 0;

  int delta() const noexcept { return after - before; }
  /// (before - after) / before; empty when before is 0.
  std::optional<double> reduction() const;
};

struct MetricsDelta {
  MetricPair sloc;
  MetricPair tokens;
  MetricPair cyclomatic;
  MetricPair cognitive;
};

MetricsDelta quality_delta(const MethodUnit& original, const MethodUnit& simplified);

}  // namespace simplikit
