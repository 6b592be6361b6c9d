#include "simplikit/source_file.hpp"

#include <array>

#include "simplikit/error.hpp"

namespace simplikit {

namespace {

constexpr std::array<std::string_view, 14> kMemberModifiers = {
    "public",    "protected", "private",  "static", "final",    "abstract", "native",
    "synchronized", "transient", "volatile", "strictfp", "default", "sealed", "non"};

class Outliner {
 public:
  Outliner(SourceFile& file) : f_(file) {
    for (std::size_t i = 0; i < f_.tokens.size(); ++i) {
      if (f_.tokens[i].significant()) sig_.push_back(i);
    }
  }

  void run() {
    std::size_t i = 0;
    // package
    std::size_t j = skip_annotations(i);
    if (is(j, "package")) {
      std::string name;
      j++;
      while (j < size() && !is(j, ";")) name += text(j++);
      f_.package = name;
      i = j + 1;
    }
    while (is(i, "import")) {
      ImportInfo imp;
      const std::size_t begin = i;
      ++i;
      if (is(i, "static")) {
        imp.is_static = true;
        ++i;
      }
      while (i < size() && !is(i, ";")) imp.name += text(i++);
      if (i >= size()) fail(begin, "unterminated import");
      imp.wildcard = imp.name.ends_with("*");
      imp.span = {tok(begin).offset, tok(i).end()};
      f_.imports.push_back(std::move(imp));
      ++i;
    }
    std::vector<std::string> scope;
    members(i, size(), scope, false);
  }

 private:
  std::size_t size() const { return sig_.size(); }
  const Token& tok(std::size_t i) const { return f_.tokens[sig_[i]]; }
  std::string_view text(std::size_t i) const { return tok(i).text; }
  bool is(std::size_t i, std::string_view s) const { return i < size() && tok(i).text == s; }

  [[noreturn]] void fail(std::size_t i, const std::string& msg) const {
    const Token& t = i < size() ? tok(i) : f_.tokens.back();
    throw SyntaxError(msg, t.line, t.column);
  }

  // Index of the token closing the bracket opened at i.
  std::size_t matching(std::size_t i) const {
    const std::string_view open = text(i);
    const std::string_view close = open == "(" ? ")" : open == "[" ? "]" : "}";
    int depth = 0;
    for (std::size_t k = i; k < size(); ++k) {
      if (text(k) == open) ++depth;
      if (text(k) == close && --depth == 0) return k;
    }
    fail(i, "unbalanced '" + std::string(open) + "'");
  }

  std::size_t skip_annotations(std::size_t i) const {
    while (is(i, "@") && !is(i + 1, "interface")) {
      i += 2;
      while (is(i, ".") && i + 1 < size()) i += 2;
      if (is(i, "(")) i = matching(i) + 1;
    }
    return i;
  }

  bool is_modifier(std::size_t i) const {
    for (const auto m : kMemberModifiers) {
      if (text(i) == m) return true;
    }
    return false;
  }

  // `non-sealed` lexes as three tokens.
  std::size_t skip_modifiers(std::size_t i) const {
    while (i < size()) {
      i = skip_annotations(i);
      if (is(i, "non") && is(i + 1, "-") && is(i + 2, "sealed")) {
        i += 3;
      } else if (i < size() && is_modifier(i) && !is(i + 1, "(")) {
        ++i;
      } else {
        break;
      }
    }
    return i;
  }

  std::string qualified(const std::vector<std::string>& scope, const std::string& leaf) const {
    std::string q = f_.package.value_or("");
    for (const std::string& s : scope) q += (q.empty() ? "" : ".") + s;
    return q + "#" + leaf;
  }

  std::string param_signature(std::size_t open, std::size_t close) const {
    std::string sig;
    std::size_t start = open + 1;
    int angle = 0;
    const auto flush = [&](std::size_t end) {
      if (start >= end) return;
      std::size_t k = skip_annotations(start);
      while (k < end && (is(k, "final") || is(k, "@"))) k = skip_annotations(is(k, "final") ? k + 1 : k);
      // The parameter name is the last identifier; dimensions after it belong to the type.
      std::size_t name = end;
      for (std::size_t m = end; m-- > k;) {
        if (tok(m).kind == TokenKind::Identifier) {
          name = m;
          break;
        }
      }
      std::string type;
      for (std::size_t m = k; m < end; ++m) {
        if (m != name) type += text(m);
      }
      if (!sig.empty()) sig += ",";
      sig += type;
    };
    for (std::size_t k = open + 1; k < close; ++k) {
      const std::string_view t = text(k);
      if (t == "<") ++angle;
      if (t == ">") --angle;
      if (t == ">>") angle -= 2;
      if (t == ">>>") angle -= 3;
      if (t == "(" || t == "[" || t == "{") k = matching(k);
      if (t == "," && angle == 0) {
        flush(k);
        start = k + 1;
      }
    }
    flush(close);
    return sig;
  }

  void members(std::size_t i, std::size_t end, std::vector<std::string>& scope, bool enum_body) {
    if (enum_body) {
      while (i < end && !is(i, ";")) {
        if (is(i, "(") || is(i, "{")) {
          i = matching(i) + 1;
        } else {
          ++i;
        }
      }
      ++i;
    }
    while (i < end) {
      if (is(i, ";")) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      i = skip_modifiers(i);
      if (i >= end) break;
      const bool annotation_type = is(i, "@") && is(i + 1, "interface");
      if (annotation_type || is(i, "class") || is(i, "interface") || is(i, "enum") ||
          is(i, "record")) {
        const bool is_enum = is(i, "enum");
        i += annotation_type ? 2 : 1;
        const std::string name(text(i));
        while (i < end && !is(i, "{")) {
          if (is(i, "(")) i = matching(i);
          ++i;
        }
        if (i >= end) fail(start, "type declaration without body");
        const std::size_t close = matching(i);
        scope.push_back(name);
        members(i + 1, close, scope, is_enum);
        scope.pop_back();
        i = close + 1;
        continue;
      }
      if (is(i, "{")) {
        i = matching(i) + 1;
        continue;
      }
      // Method, constructor, or field: decided by what comes first.
      std::size_t k = i;
      while (k < end && !is(k, "(") && !is(k, "=") && !is(k, ";") && !is(k, "{")) ++k;
      if (k < end && is(k, "(") && k > i && tok(k - 1).kind == TokenKind::Identifier) {
        const std::size_t params_close = matching(k);
        std::size_t b = params_close + 1;
        while (b < end && !is(b, "{") && !is(b, ";")) {
          if (is(b, "(")) b = matching(b);
          ++b;
        }
        if (b >= end) fail(start, "method without body");
        const std::size_t last = is(b, "{") ? matching(b) : b;
        MethodLocation loc;
        loc.name = std::string(text(k - 1));
        loc.qualified_name = qualified(scope, loc.name + "(" + param_signature(k, params_close) + ")");
        loc.span = {tok(start).offset, tok(last).end()};
        f_.methods.push_back(std::move(loc));
        i = last + 1;
        continue;
      }
      // Field: up to the terminating semicolon.
      while (i < end && !is(i, ";")) {
        if (is(i, "(") || is(i, "{") || is(i, "[")) {
          i = matching(i) + 1;
        } else {
          ++i;
        }
      }
      ++i;
    }
  }

  SourceFile& f_;
  std::vector<std::size_t> sig_;
};

}  // namespace

std::string ImportInfo::package() const {
  std::string n = name;
  if (wildcard && n.size() >= 2) n.resize(n.size() - 2);
  const std::size_t dot = n.rfind('.');
  if (wildcard) return n;
  return dot == std::string::npos ? std::string() : n.substr(0, dot);
}

std::string ImportInfo::simple_name() const {
  const std::size_t dot = name.rfind('.');
  return dot == std::string::npos ? name : name.substr(dot + 1);
}

MethodUnit SourceFile::method(const MethodLocation& loc) const {
  MethodUnit unit = parse_method(std::string_view(text).substr(loc.span.begin, loc.span.size()));
  unit.qualified_name = loc.qualified_name;
  unit.file_span = loc.span;
  return unit;
}

const MethodLocation* SourceFile::find_method(std::string_view qualified_name) const {
  for (const MethodLocation& m : methods) {
    if (m.qualified_name == qualified_name) return &m;
  }
  return nullptr;
}

SourceFile parse_source_file(std::string_view text, std::string path) {
  SourceFile file;
  file.path = std::move(path);
  file.text = std::string(text);
  file.tokens = tokenize(file.text);
  Outliner(file).run();
  return file;
}

}  // namespace simplikit
