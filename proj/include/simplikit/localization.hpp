#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simplikit/syntax.hpp"

namespace simplikit {

inline constexpr std::string_view kOriginalOpen = "<original>";
inline constexpr std::string_view kOriginalClose = "</original>";
inline constexpr std::string_view kSimplifiedOpen = "<simplified>";
inline constexpr std::string_view kSimplifiedClose = "</simplified>";

struct DiffLine {
  int number = 0;  // 1-based, in its own text
  std::string text;
  bool significant = false;
};

struct DiffHunk {
  std::vector<DiffLine> deleted;
  std::vector<DiffLine> added;
  /// Line of the original before which the hunk sits (1-based; one past the
  /// end for trailing insertions).
  int anchor = 1;

  int significant_deleted() const;
  int significant_added() const;
};

/// Line diff with lines compared after trimming surrounding whitespace.
std::vector<DiffHunk> diff(std::string_view original, std::string_view simplified);
std::vector<DiffHunk> diff(const MethodUnit& original, const MethodUnit& simplified);

/// More significant deleted lines than significant added lines.
bool qualifies_as_simplification(const DiffHunk& hunk);

/// Wraps each changed original line in <original> markers. With
/// `include_simplified`, the hunk's added lines follow its deleted lines,
/// wrapped in <simplified> markers. Indentation stays outside the markers.
std::string encode_localized(std::string_view original, const std::vector<DiffHunk>& hunks,
                             bool include_simplified = true);
std::string encode_localized(const MethodUnit& original, const std::vector<DiffHunk>& hunks,
                             bool include_simplified = true);

/// Inverse of encode_localized: drops <simplified> lines and the <original>
/// tags. Throws MalformedMarkers on unbalanced tags.
std::string strip_markers(std::string_view text);

/// 1-based lines carrying <original> markers, numbered as in the stripped text.
std::vector<int> marked_lines(std::string_view localized);

/// Inference-time localization: marks every line touched by an applicable
/// catalog rewrite.
std::string localize_heuristic(const MethodUnit& unit);

}  // namespace simplikit
