#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplikit/source_file.hpp"
#include "simplikit/syntax.hpp"

namespace simplikit {

/// One row of the simplification taxonomy.
struct RuleInfo {
  std::string code;  // "T1.1" .. "T7.6"
  std::string title;
  std::string description;
  bool executable = false;
  /// Executable rules of file scope (imports) rather than method scope.
  bool file_scope = false;
};

/// All 26 taxonomy codes in table order.
const std::vector<RuleInfo>& rule_table();
const RuleInfo* find_rule(std::string_view code);

struct Rewrite {
  std::string rule;
  Span target;
  std::string replacement;
  /// Text of `target` when the rewrite was produced; used to detect staleness.
  std::string expected;
  std::string evidence;
};

struct CatalogOptions {
  int merge_imports_threshold = 5;
};

/// Rewrites applicable to a method, sorted by (target begin, rule, replacement).
std::vector<Rewrite> applicable_rules(const MethodUnit& unit);

/// Splices the rewrite into the unit and re-parses. Throws StaleRewrite when
/// the target no longer holds the expected text.
MethodUnit apply(const MethodUnit& unit, const Rewrite& rewrite);

/// Import-level rewrites (unused imports, package merges).
std::vector<Rewrite> applicable_file_rules(const SourceFile& file, const CatalogOptions& options = {});
SourceFile apply(const SourceFile& file, const Rewrite& rewrite);

/// Fewer SLOC, or equal SLOC and fewer tokens.
bool is_smaller(const MethodUnit& candidate, const MethodUnit& reference);
bool is_smaller(int sloc, int tokens, int ref_sloc, int ref_tokens);

struct Derivation {
  MethodUnit unit;
  std::vector<std::string> rules;  // rule codes along the derivation path
};

struct EnumerateOptions {
  /// When set, only rewrites touching these 1-based lines of the root unit
  /// are used (line positions are tracked through earlier rewrites).
  std::optional<std::vector<int>> marked_lines;
};

/// Breadth-first closure of rule applications, deduplicated by significant
/// tokens; every derivation is smaller than its parent.
std::vector<Derivation> enumerate_derivations(const MethodUnit& unit, int budget,
                                              const EnumerateOptions& options = {});
std::vector<MethodUnit> enumerate_candidates(const MethodUnit& unit, int budget,
                                             const EnumerateOptions& options = {});

struct Classification {
  std::vector<std::string> rules;  // sorted, unique
  int unclassified_hunks = 0;
};

/// Explains the (original, simplified) difference in taxonomy codes.
Classification classify_detailed(const MethodUnit& original, const MethodUnit& simplified);
std::vector<std::string> classify(const MethodUnit& original, const MethodUnit& simplified);

}  // namespace simplikit
