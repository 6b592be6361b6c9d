#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace simplikit {

enum class EditKind { Equal, Delete, Insert };

/// One step of an edit script. `a` indexes the old sequence (Equal, Delete),
/// `b` the new one (Equal, Insert).
struct Edit {
  EditKind kind;
  std::size_t a = 0;
  std::size_t b = 0;
};

/// Shortest edit script (Myers). Within a change run, deletions come first.
std::vector<Edit> myers_diff(const std::vector<std::string>& a, const std::vector<std::string>& b);

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// |a| + |b| - 2 * LCS(a, b).
std::size_t edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Lines without their terminators. A trailing newline does not open a new line.
std::vector<std::string> split_lines(std::string_view text);

std::string_view trim(std::string_view s);

}  // namespace simplikit
