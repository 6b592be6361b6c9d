#include "simplikit/diff.hpp"

#include <algorithm>

namespace simplikit {

std::vector<Edit> myers_diff(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const long n = static_cast<long>(a.size());
  const long m = static_cast<long>(b.size());
  const long max = n + m;
  const long offset = max + 1;
  std::vector<long> v(2 * max + 3, 0);
  std::vector<std::vector<long>> trace;
  long found_d = -1;
  for (long d = 0; d <= max && found_d < 0; ++d) {
    trace.push_back(v);
    for (long k = -d; k <= d; k += 2) {
      long x;
      // Prefer moving down (insert) only when forced; this keeps deletions first.
      if (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1])) {
        x = v[offset + k + 1];
      } else {
        x = v[offset + k - 1] + 1;
      }
      long y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[offset + k] = x;
      if (x >= n && y >= m) {
        found_d = d;
        break;
      }
    }
  }
  trace.push_back(v);

  std::vector<Edit> out;
  long x = n;
  long y = m;
  for (long d = found_d; d > 0; --d) {
    const std::vector<long>& vd = trace[d];
    const long k = x - y;
    long prev_k;
    if (k == -d || (k != d && vd[offset + k - 1] < vd[offset + k + 1])) {
      prev_k = k + 1;
    } else {
      prev_k = k - 1;
    }
    const long prev_x = vd[offset + prev_k];
    const long prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      --x;
      --y;
      out.push_back({EditKind::Equal, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
    }
    if (x == prev_x) {
      --y;
      out.push_back({EditKind::Insert, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
    } else {
      --x;
      out.push_back({EditKind::Delete, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
    }
  }
  while (x > 0 && y > 0) {
    --x;
    --y;
    out.push_back({EditKind::Equal, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
  }
  std::reverse(out.begin(), out.end());

  // Normalize each change run to deletions followed by insertions.
  std::vector<Edit> sorted;
  sorted.reserve(out.size());
  for (std::size_t i = 0; i < out.size();) {
    if (out[i].kind == EditKind::Equal) {
      sorted.push_back(out[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < out.size() && out[j].kind != EditKind::Equal) ++j;
    for (std::size_t t = i; t < j; ++t) {
      if (out[t].kind == EditKind::Delete) sorted.push_back(out[t]);
    }
    for (std::size_t t = i; t < j; ++t) {
      if (out[t].kind == EditKind::Insert) sorted.push_back(out[t]);
    }
    i = j;
  }
  return sorted;
}

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return a.size() + b.size() - 2 * lcs_length(a, b);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace simplikit
