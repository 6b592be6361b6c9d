#include "simplikit/localization.hpp"

#include <algorithm>
#include <set>

#include "simplikit/catalog.hpp"
#include "simplikit/diff.hpp"
#include "simplikit/error.hpp"

namespace simplikit {

namespace {

std::vector<std::string> trimmed(const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (const std::string& l : lines) out.emplace_back(trim(l));
  return out;
}

bool line_flag(const std::vector<bool>& flags, std::size_t index) {
  return index < flags.size() && flags[index];
}

struct LineParts {
  std::string_view lead;
  std::string_view body;
  std::string_view tail;
};

LineParts split_line(std::string_view line) {
  const std::string_view body = trim(line);
  if (body.empty()) return {line, {}, {}};
  const std::size_t begin = static_cast<std::size_t>(body.data() - line.data());
  return {line.substr(0, begin), body, line.substr(begin + body.size())};
}

// Lines of `text`, each with its terminator (if any).
std::vector<std::string_view> raw_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl + 1;
    out.push_back(text.substr(start, end - start));
    start = end;
  }
  return out;
}

std::string_view without_newline(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  return line;
}

std::size_t count_of(std::string_view hay, std::string_view needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string_view::npos; p = hay.find(needle, p + needle.size())) ++n;
  return n;
}

}  // namespace

int DiffHunk::significant_deleted() const {
  return static_cast<int>(std::count_if(deleted.begin(), deleted.end(), [](const DiffLine& l) { return l.significant; }));
}

int DiffHunk::significant_added() const {
  return static_cast<int>(std::count_if(added.begin(), added.end(), [](const DiffLine& l) { return l.significant; }));
}

std::vector<DiffHunk> diff(std::string_view original, std::string_view simplified) {
  const std::vector<std::string> a = split_lines(original);
  const std::vector<std::string> b = split_lines(simplified);
  const std::vector<bool> sig_a = significant_lines(original);
  const std::vector<bool> sig_b = significant_lines(simplified);
  const std::vector<Edit> script = myers_diff(trimmed(a), trimmed(b));

  std::vector<DiffHunk> hunks;
  bool open = false;
  for (const Edit& e : script) {
    if (e.kind == EditKind::Equal) {
      open = false;
      continue;
    }
    if (!open) {
      hunks.emplace_back();
      hunks.back().anchor = static_cast<int>(e.a) + 1;
      open = true;
    }
    if (e.kind == EditKind::Delete) {
      hunks.back().deleted.push_back({static_cast<int>(e.a) + 1, a[e.a], line_flag(sig_a, e.a)});
    } else {
      hunks.back().added.push_back({static_cast<int>(e.b) + 1, b[e.b], line_flag(sig_b, e.b)});
    }
  }
  return hunks;
}

std::vector<DiffHunk> diff(const MethodUnit& original, const MethodUnit& simplified) {
  return diff(original.source, simplified.source);
}

bool qualifies_as_simplification(const DiffHunk& hunk) {
  return hunk.significant_deleted() > hunk.significant_added();
}

std::string encode_localized(std::string_view original, const std::vector<DiffHunk>& hunks,
                             bool include_simplified) {
  const std::vector<std::string_view> lines = raw_lines(original);
  std::set<int> changed;
  // Added lines go after the hunk's last deleted line, or before its anchor.
  std::vector<std::pair<int, const DiffHunk*>> after;
  std::vector<std::pair<int, const DiffHunk*>> before;
  for (const DiffHunk& h : hunks) {
    for (const DiffLine& l : h.deleted) changed.insert(l.number);
    if (!include_simplified || h.added.empty()) continue;
    if (h.deleted.empty()) {
      before.emplace_back(h.anchor, &h);
    } else {
      after.emplace_back(h.deleted.back().number, &h);
    }
  }

  std::string out;
  const auto emit_added = [&](const DiffHunk& h, bool need_newline_first) {
    for (const DiffLine& l : h.added) {
      if (need_newline_first) {
        out += '\n';
        need_newline_first = false;
      }
      const LineParts p = split_line(l.text);
      if (p.body.empty()) {
        out += l.text;
      } else {
        out += std::string(p.lead) + std::string(kSimplifiedOpen) + std::string(p.body) +
               std::string(kSimplifiedClose) + std::string(p.tail);
      }
      out += '\n';
    }
  };

  const int count = static_cast<int>(lines.size());
  for (int n = 1; n <= count; ++n) {
    for (const auto& [at, h] : before) {
      if (at == n) emit_added(*h, false);
    }
    const std::string_view raw = lines[n - 1];
    const std::string_view line = without_newline(raw);
    const bool has_newline = raw.size() != line.size();
    const LineParts p = split_line(line);
    if (changed.count(n) && !p.body.empty()) {
      out += std::string(p.lead) + std::string(kOriginalOpen) + std::string(p.body) +
             std::string(kOriginalClose) + std::string(p.tail);
    } else {
      out += line;
    }
    if (has_newline) out += '\n';
    for (const auto& [at, h] : after) {
      if (at == n) emit_added(*h, !has_newline);
    }
  }
  for (const auto& [at, h] : before) {
    if (at > count) emit_added(*h, !original.empty() && original.back() != '\n');
  }
  return out;
}

std::string encode_localized(const MethodUnit& original, const std::vector<DiffHunk>& hunks,
                             bool include_simplified) {
  return encode_localized(original.source, hunks, include_simplified);
}

std::string strip_markers(std::string_view text) {
  std::string out;
  int line_no = 0;
  for (const std::string_view raw : raw_lines(text)) {
    ++line_no;
    const std::string_view line = without_newline(raw);
    const std::size_t so = count_of(line, kSimplifiedOpen);
    const std::size_t sc = count_of(line, kSimplifiedClose);
    const std::size_t oo = count_of(line, kOriginalOpen);
    const std::size_t oc = count_of(line, kOriginalClose);
    const std::string where = " on line " + std::to_string(line_no);
    if (so != sc) throw MalformedMarkers("unbalanced <simplified> tags" + where);
    if (oo != oc) throw MalformedMarkers("unbalanced <original> tags" + where);
    if (so > 0) {
      if (oo > 0) throw MalformedMarkers("<original> and <simplified> on one line" + where);
      const std::size_t open = line.find(kSimplifiedOpen);
      const std::size_t close = line.find(kSimplifiedClose);
      if (close < open || so > 1) throw MalformedMarkers("misplaced <simplified> tags" + where);
      continue;
    }
    std::string kept;
    std::size_t depth = 0;
    for (std::size_t i = 0; i < raw.size();) {
      if (raw.substr(i).starts_with(kOriginalOpen)) {
        if (depth > 0) throw MalformedMarkers("nested <original> tags" + where);
        ++depth;
        i += kOriginalOpen.size();
      } else if (raw.substr(i).starts_with(kOriginalClose)) {
        if (depth == 0) throw MalformedMarkers("</original> without <original>" + where);
        --depth;
        i += kOriginalClose.size();
      } else {
        kept += raw[i++];
      }
    }
    out += kept;
  }
  return out;
}

std::vector<int> marked_lines(std::string_view localized) {
  std::vector<int> out;
  int line_no = 0;
  for (const std::string_view raw : raw_lines(localized)) {
    if (raw.find(kSimplifiedOpen) != std::string_view::npos) continue;
    ++line_no;
    if (raw.find(kOriginalOpen) != std::string_view::npos) out.push_back(line_no);
  }
  return out;
}

std::string localize_heuristic(const MethodUnit& unit) {
  std::set<int> lines;
  std::vector<std::size_t> line_starts{0};
  for (std::size_t i = 0; i < unit.source.size(); ++i) {
    if (unit.source[i] == '\n') line_starts.push_back(i + 1);
  }
  const auto line_of = [&](std::size_t offset) {
    return static_cast<int>(std::upper_bound(line_starts.begin(), line_starts.end(), offset) - line_starts.begin());
  };
  for (const Rewrite& r : applicable_rules(unit)) {
    const int first = line_of(r.target.begin);
    const int last = line_of(r.target.end > r.target.begin ? r.target.end - 1 : r.target.begin);
    for (int l = first; l <= last; ++l) lines.insert(l);
  }
  DiffHunk all;
  const std::vector<std::string> text_lines = split_lines(unit.source);
  for (const int l : lines) {
    if (l - 1 < static_cast<int>(text_lines.size())) all.deleted.push_back({l, text_lines[l - 1], true});
  }
  if (all.deleted.empty()) return unit.source;
  all.anchor = all.deleted.front().number;
  return encode_localized(unit.source, {all}, false);
}

}  // namespace simplikit
