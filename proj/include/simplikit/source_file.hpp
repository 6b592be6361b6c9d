#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplikit/lexer.hpp"
#include "simplikit/syntax.hpp"

namespace simplikit {

struct ImportInfo {
  Span span;         // from `import` to `;`
  std::string name;  // dotted name, `.*` included for wildcards
  bool is_static = false;
  bool wildcard = false;

  std::string package() const;      // prefix before the last dot
  std::string simple_name() const;  // last segment
};

struct MethodLocation {
  std::string name;
  /// package.Outer.Inner#name(ParamType,...)
  std::string qualified_name;
  /// Annotations through closing brace (or `;`), leading comments excluded.
  Span span;
};

/// File-level outline: package, imports, and the spans of every method and
/// constructor declared in (possibly nested) type bodies.
struct SourceFile {
  std::string path;
  std::string text;
  std::vector<Token> tokens;
  std::optional<std::string> package;
  std::vector<ImportInfo> imports;
  std::vector<MethodLocation> methods;

  /// Parses the method at `loc` and records its file span.
  MethodUnit method(const MethodLocation& loc) const;
  const MethodLocation* find_method(std::string_view qualified_name) const;
};

/// Throws SyntaxError when braces do not balance.
SourceFile parse_source_file(std::string_view text, std::string path = "");

}  // namespace simplikit
