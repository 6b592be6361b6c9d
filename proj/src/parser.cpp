#include <algorithm>
#include <array>
#include <optional>

#include "simplikit/error.hpp"
#include "simplikit/syntax.hpp"

namespace simplikit {

namespace {

constexpr std::array<std::string_view, 8> kPrimitiveTypes = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double"};

constexpr std::array<std::string_view, 13> kModifierWords = {
    "public",   "protected", "private",  "static",    "final",
    "abstract", "native",    "synchronized", "transient", "volatile",
    "strictfp", "default",   "sealed"};

constexpr std::array<std::string_view, 12> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};

bool is_primitive(std::string_view s) {
  return std::find(kPrimitiveTypes.begin(), kPrimitiveTypes.end(), s) != kPrimitiveTypes.end();
}

bool is_assign_op(std::string_view s) {
  return std::find(kAssignOps.begin(), kAssignOps.end(), s) != kAssignOps.end();
}

int binary_precedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof") return 7;
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return -1;
}

// Parser token. Compound tokens that begin with '>' are split into
// one-character pieces so that nested type arguments close cleanly; `glued`
// marks a piece that continues into the next one.
struct PTok {
  TokenKind kind = TokenKind::Whitespace;
  std::string_view text;
  std::size_t offset = 0;
  int line = 0;
  int column = 0;
  bool glued = false;
  bool eof = false;

  std::size_t end() const { return offset + text.size(); }
};

bool is_word(const PTok& t) {
  return t.kind == TokenKind::Identifier || t.kind == TokenKind::Keyword ||
         t.kind == TokenKind::Literal;
}

class Parser {
 public:
  Parser(std::string_view source, const std::vector<Token>& tokens) : src_(source) {
    for (const Token& tok : tokens) {
      if (!tok.significant()) continue;
      const std::string_view text = std::string_view(source).substr(tok.offset, tok.text.size());
      if (tok.kind == TokenKind::Operator && text.size() > 1 && text[0] == '>') {
        for (std::size_t i = 0; i < text.size(); ++i) {
          PTok piece{TokenKind::Operator, text.substr(i, 1), tok.offset + i, tok.line,
                     tok.column + static_cast<int>(i), i + 1 < text.size(), false};
          toks_.push_back(piece);
        }
      } else {
        toks_.push_back(PTok{tok.kind, text, tok.offset, tok.line, tok.column, false, false});
      }
    }
    eof_.eof = true;
    eof_.offset = source.size();
    if (!tokens.empty()) {
      eof_.line = tokens.back().line;
      eof_.column = tokens.back().column + static_cast<int>(tokens.back().text.size());
    } else {
      eof_.line = 1;
      eof_.column = 1;
    }
  }

  SyntaxTree parse_method_tree() {
    const NodeId root = parse_method_decl();
    if (!cur().eof) fail("unexpected trailing input '" + std::string(cur().text) + "'");
    return SyntaxTree(std::move(nodes_), root);
  }

 private:
  // ---- token access -------------------------------------------------------

  const PTok& at(std::size_t i) const { return i < toks_.size() ? toks_[i] : eof_; }
  const PTok& cur() const { return at(pos_); }
  const PTok& peek(std::size_t ahead = 1) const { return at(pos_ + ahead); }
  bool is(std::string_view s) const { return !cur().eof && cur().text == s && !glued_op(pos_); }
  bool is_at(std::size_t i, std::string_view s) const {
    return !at(i).eof && at(i).text == s && !glued_op(i);
  }
  bool is_ident_at(std::size_t i) const { return at(i).kind == TokenKind::Identifier && !at(i).eof; }
  bool is_ident() const { return is_ident_at(pos_); }

  // A '>' piece that is glued to its successor is part of a larger operator.
  bool glued_op(std::size_t i) const { return at(i).glued; }

  void consume() {
    if (cur().eof) fail("unexpected end of input");
    last_end_ = cur().end();
    ++pos_;
  }

  void expect(std::string_view s) {
    if (!is(s)) {
      fail("expected '" + std::string(s) + "' but found " +
           (cur().eof ? std::string("end of input") : "'" + std::string(cur().text) + "'"));
    }
    consume();
  }

  // Closing '>' of a type argument list: takes one piece even when glued.
  void expect_close_angle() {
    if (cur().eof || cur().text != ">") fail("expected '>'");
    consume();
  }

  std::string expect_ident() {
    if (!is_ident()) {
      fail("expected identifier but found " +
           (cur().eof ? std::string("end of input") : "'" + std::string(cur().text) + "'"));
    }
    std::string name(cur().text);
    consume();
    return name;
  }

  // Operator starting at token i, merging glued '>' pieces. Returns the
  // operator text and how many parser tokens it spans.
  std::pair<std::string, std::size_t> op_at(std::size_t i) const {
    const PTok& t = at(i);
    if (t.eof) return {"", 0};
    if (t.kind != TokenKind::Operator && t.text != "instanceof") return {"", 0};
    std::string op(t.text);
    std::size_t n = 1;
    while (at(i + n - 1).glued) {
      op += at(i + n).text;
      ++n;
    }
    return {op, n};
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, cur().line, cur().column);
  }
  [[noreturn]] void unsupported(const std::string& what) const {
    throw UnsupportedConstruct("unsupported construct: " + what, cur().line, cur().column);
  }

  // ---- node construction --------------------------------------------------

  NodeId make(NodeKind kind, std::size_t begin) {
    Node n;
    n.kind = kind;
    n.span = Span{begin, begin};
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
  }
  NodeId start(NodeKind kind) { return make(kind, cur().offset); }
  NodeId close(NodeId id) {
    nodes_[id].span.end = std::max(last_end_, nodes_[id].span.begin);
    return id;
  }
  void attach(NodeId parent, NodeId child, Role role) {
    nodes_[child].parent = parent;
    nodes_[child].role = role;
    nodes_[parent].children.push_back(child);
  }
  // Wraps `first` into a new node of `kind` that starts where `first` starts.
  NodeId wrap(NodeKind kind, NodeId first, Role role) {
    const NodeId id = make(kind, nodes_[first].span.begin);
    attach(id, first, role);
    return id;
  }

  std::string compact_text(std::size_t begin, std::size_t end) const {
    std::string out;
    const PTok* prev = nullptr;
    for (const PTok& t : toks_) {
      if (t.offset < begin || t.end() > end) continue;
      if (prev != nullptr) {
        const bool spaced = (is_word(*prev) && is_word(t)) || t.text == "extends" ||
                            t.text == "super" || t.text == "&" || prev->text == "&" ||
                            prev->text == ",";
        if (spaced) out += ' ';
      }
      out += t.text;
      prev = &t;
    }
    return out;
  }

  // ---- lookahead scanners (no nodes built) --------------------------------

  std::optional<std::size_t> scan_annotation(std::size_t i) const {
    if (!is_at(i, "@") || is_at(i + 1, "interface")) return std::nullopt;
    ++i;
    if (!is_ident_at(i)) return std::nullopt;
    ++i;
    while (is_at(i, ".") && is_ident_at(i + 1)) i += 2;
    if (is_at(i, "(")) {
      int depth = 0;
      do {
        if (at(i).eof) return std::nullopt;
        if (is_at(i, "(")) ++depth;
        if (is_at(i, ")")) --depth;
        ++i;
      } while (depth > 0);
    }
    return i;
  }

  std::optional<std::size_t> scan_type_args(std::size_t i) const {
    if (!is_at(i, "<")) return std::nullopt;
    ++i;
    if (at(i).text == ">") return i + 1;
    while (true) {
      if (is_at(i, "?")) {
        ++i;
        if (is_at(i, "extends") || is_at(i, "super")) {
          auto e = scan_type(i + 1);
          if (!e) return std::nullopt;
          i = *e;
        }
      } else {
        auto e = scan_type(i);
        if (!e) return std::nullopt;
        i = *e;
      }
      if (is_at(i, ",")) {
        ++i;
        continue;
      }
      if (at(i).text == ">" && !at(i).eof) return i + 1;
      return std::nullopt;
    }
  }

  std::optional<std::size_t> scan_type(std::size_t i) const {
    while (is_at(i, "@")) {
      auto e = scan_annotation(i);
      if (!e) return std::nullopt;
      i = *e;
    }
    if (at(i).kind == TokenKind::Keyword && is_primitive(at(i).text)) {
      ++i;
    } else if (is_ident_at(i)) {
      ++i;
      if (is_at(i, "<")) {
        auto e = scan_type_args(i);
        if (!e) return std::nullopt;
        i = *e;
      }
      while (is_at(i, ".") && is_ident_at(i + 1)) {
        i += 2;
        if (is_at(i, "<")) {
          auto e = scan_type_args(i);
          if (!e) return std::nullopt;
          i = *e;
        }
      }
    } else {
      return std::nullopt;
    }
    while (is_at(i, "[") && is_at(i + 1, "]")) i += 2;
    return i;
  }

  std::size_t skip_modifiers(std::size_t i) const {
    while (true) {
      if (is_at(i, "final")) {
        ++i;
      } else if (is_at(i, "@") && !is_at(i + 1, "interface")) {
        auto e = scan_annotation(i);
        if (!e) return i;
        i = *e;
      } else {
        return i;
      }
    }
  }

  // [modifiers] Type ident followed by one of = ; , [ :
  bool local_var_decl_ahead() const {
    std::size_t i = skip_modifiers(pos_);
    const bool had_modifiers = i != pos_;
    auto e = scan_type(i);
    if (!e) return false;
    if (!is_ident_at(*e)) return false;
    if (had_modifiers) return true;
    const std::size_t after = *e + 1;
    return is_at(after, "=") || is_at(after, ";") || is_at(after, ",") || is_at(after, "[") ||
           is_at(after, ":");
  }

  std::optional<std::size_t> matching_close(std::size_t i, std::string_view open,
                                            std::string_view close_tok) const {
    int depth = 0;
    for (; !at(i).eof; ++i) {
      if (is_at(i, open)) ++depth;
      if (is_at(i, close_tok)) {
        if (--depth == 0) return i;
      }
    }
    return std::nullopt;
  }

  bool lambda_ahead() const {
    if (is_ident() && is_at(pos_ + 1, "->")) return true;
    if (is("(")) {
      auto close_idx = matching_close(pos_, "(", ")");
      return close_idx && is_at(*close_idx + 1, "->");
    }
    return false;
  }

  // ---- declarations -------------------------------------------------------

  NodeId parse_annotation() {
    const NodeId n = start(NodeKind::Annotation);
    expect("@");
    std::string name = expect_ident();
    while (is(".") && is_ident_at(pos_ + 1)) {
      consume();
      name += "." + expect_ident();
    }
    nodes_[n].text = name;
    if (is("(")) {
      auto close_idx = matching_close(pos_, "(", ")");
      if (!close_idx) fail("unbalanced annotation arguments");
      while (pos_ <= *close_idx) consume();
    }
    return close(n);
  }

  // Returns kNoNode when there are no modifiers.
  NodeId parse_modifiers(bool method_level) {
    if (!(is("@") || is_modifier_word(method_level))) return kNoNode;
    const NodeId n = start(NodeKind::Modifiers);
    std::string words;
    while (true) {
      if (is("@") && !is_at(pos_ + 1, "interface")) {
        attach(n, parse_annotation(), Role::Modifier);
      } else if (is_modifier_word(method_level)) {
        if (!words.empty()) words += ' ';
        words += std::string(cur().text);
        consume();
      } else {
        break;
      }
    }
    nodes_[n].text = words;
    return close(n);
  }

  bool is_modifier_word(bool method_level) const {
    if (cur().eof) return false;
    if (!method_level) return is("final");
    if (cur().kind != TokenKind::Keyword && cur().text != "sealed") return false;
    return std::find(kModifierWords.begin(), kModifierWords.end(), cur().text) !=
           kModifierWords.end();
  }

  NodeId parse_type_args() {
    const NodeId n = start(NodeKind::TypeArgs);
    expect("<");
    if (cur().text == ">" && !cur().eof) {
      expect_close_angle();
      return close(n);
    }
    while (true) {
      if (is("?")) {
        const NodeId w = start(NodeKind::Type);
        consume();
        if (is("extends") || is("super")) {
          consume();
          attach(w, parse_type(), Role::TypeArg);
        }
        close(w);
        nodes_[w].text = compact_text(nodes_[w].span.begin, nodes_[w].span.end);
        attach(n, w, Role::TypeArg);
      } else {
        attach(n, parse_type(), Role::TypeArg);
      }
      if (is(",")) {
        consume();
        continue;
      }
      expect_close_angle();
      break;
    }
    return close(n);
  }

  NodeId parse_type(bool allow_dims = true) {
    const NodeId n = start(NodeKind::Type);
    while (is("@")) attach(n, parse_annotation(), Role::Modifier);
    if (cur().kind == TokenKind::Keyword && is_primitive(cur().text)) {
      consume();
    } else if (is_ident()) {
      consume();
      if (is("<")) attach(n, parse_type_args(), Role::TypeArg);
      while (is(".") && is_ident_at(pos_ + 1)) {
        consume();
        consume();
        if (is("<")) attach(n, parse_type_args(), Role::TypeArg);
      }
    } else {
      fail("expected type but found " +
           (cur().eof ? std::string("end of input") : "'" + std::string(cur().text) + "'"));
    }
    while (allow_dims && is("[") && is_at(pos_ + 1, "]")) {
      consume();
      consume();
    }
    close(n);
    nodes_[n].text = compact_text(nodes_[n].span.begin, nodes_[n].span.end);
    return n;
  }

  NodeId parse_parameter() {
    const NodeId n = start(NodeKind::Parameter);
    const NodeId mods = parse_modifiers(false);
    if (mods != kNoNode) attach(n, mods, Role::Modifier);
    const NodeId type = parse_type();
    attach(n, type, Role::Type);
    if (is("...")) {
      consume();
      close(type);
      nodes_[type].text += "...";
    }
    nodes_[n].text = expect_ident();
    while (is("[") && is_at(pos_ + 1, "]")) {
      consume();
      consume();
    }
    return close(n);
  }

  NodeId parse_method_decl() {
    if (cur().eof) fail("empty input");
    const NodeId n = start(NodeKind::MethodDecl);
    const NodeId mods = parse_modifiers(true);
    if (mods != kNoNode) attach(n, mods, Role::Modifier);
    if (is("class") || is("interface") || is("enum") || (is("@") && is_at(pos_ + 1, "interface"))) {
      unsupported("type declaration where a method was expected");
    }
    if (is("<")) {
      const NodeId tp = start(NodeKind::TypeParams);
      auto e = matching_angle(pos_);
      if (!e) fail("unbalanced type parameters");
      while (pos_ < *e) consume();
      attach(n, close(tp), Role::TypeParam);
    }
    if (is_ident() && is_at(pos_ + 1, "(")) {
      nodes_[n].text = expect_ident();  // constructor
    } else {
      if (is("void")) {
        const NodeId v = start(NodeKind::Type);
        consume();
        nodes_[v].text = "void";
        attach(n, close(v), Role::ResultType);
      } else {
        attach(n, parse_type(), Role::ResultType);
      }
      nodes_[n].text = expect_ident();
    }
    expect("(");
    if (!is(")")) {
      while (true) {
        attach(n, parse_parameter(), Role::Param);
        if (is(",")) {
          consume();
          continue;
        }
        break;
      }
    }
    expect(")");
    while (is("[") && is_at(pos_ + 1, "]")) {
      consume();
      consume();
    }
    if (is("throws")) {
      consume();
      while (true) {
        attach(n, parse_type(), Role::Throws);
        if (is(",")) {
          consume();
          continue;
        }
        break;
      }
    }
    if (is("{")) {
      attach(n, parse_block(), Role::Body);
    } else if (is("default")) {
      unsupported("annotation member default");
    } else {
      expect(";");
    }
    return close(n);
  }

  std::optional<std::size_t> matching_angle(std::size_t i) const {
    int depth = 0;
    for (; !at(i).eof; ++i) {
      if (at(i).text == "<") ++depth;
      if (at(i).text == ">") {
        if (--depth == 0) return i + 1;
      }
      if (is_at(i, "(") || is_at(i, "{") || is_at(i, ";")) return std::nullopt;
    }
    return std::nullopt;
  }

  // ---- statements ---------------------------------------------------------

  NodeId parse_block() {
    const NodeId n = start(NodeKind::Block);
    expect("{");
    while (!is("}")) {
      if (cur().eof) fail("unterminated block");
      attach(n, parse_statement(), Role::Body);
    }
    expect("}");
    return close(n);
  }

  NodeId parse_local_var_decl(bool allow_init = true) {
    const NodeId n = start(NodeKind::LocalVarDecl);
    const NodeId mods = parse_modifiers(false);
    if (mods != kNoNode) attach(n, mods, Role::Modifier);
    attach(n, parse_type(), Role::Type);
    while (true) {
      const NodeId d = start(NodeKind::VarDeclarator);
      nodes_[d].text = expect_ident();
      while (is("[") && is_at(pos_ + 1, "]")) {
        consume();
        consume();
      }
      if (allow_init && is("=")) {
        consume();
        attach(d, is("{") ? parse_array_init() : parse_expression(), Role::Init);
      }
      attach(n, close(d), Role::Declarator);
      if (allow_init && is(",")) {
        consume();
        continue;
      }
      break;
    }
    return close(n);
  }

  NodeId parse_statement() {
    if (is("{")) return parse_block();
    if (is(";")) {
      const NodeId n = start(NodeKind::Empty);
      consume();
      return close(n);
    }
    if (is("if")) return parse_if();
    if (is("for")) return parse_for();
    if (is("while")) {
      const NodeId n = start(NodeKind::While);
      consume();
      expect("(");
      attach(n, parse_expression(), Role::Condition);
      expect(")");
      attach(n, parse_statement(), Role::Body);
      return close(n);
    }
    if (is("do")) {
      const NodeId n = start(NodeKind::Do);
      consume();
      attach(n, parse_statement(), Role::Body);
      expect("while");
      expect("(");
      attach(n, parse_expression(), Role::Condition);
      expect(")");
      expect(";");
      return close(n);
    }
    if (is("switch")) return parse_switch();
    if (is("try")) return parse_try();
    if (is("return")) {
      const NodeId n = start(NodeKind::Return);
      consume();
      if (!is(";")) attach(n, parse_expression(), Role::Value);
      expect(";");
      return close(n);
    }
    if (is("throw")) {
      const NodeId n = start(NodeKind::Throw);
      consume();
      attach(n, parse_expression(), Role::Value);
      expect(";");
      return close(n);
    }
    if (is("break") || is("continue")) {
      const NodeId n = start(is("break") ? NodeKind::Break : NodeKind::Continue);
      consume();
      if (is_ident()) nodes_[n].text = expect_ident();
      expect(";");
      return close(n);
    }
    if (is("synchronized")) {
      const NodeId n = start(NodeKind::Synchronized);
      consume();
      expect("(");
      attach(n, parse_expression(), Role::Condition);
      expect(")");
      attach(n, parse_block(), Role::Body);
      return close(n);
    }
    if (is("assert")) {
      const NodeId n = start(NodeKind::Assert);
      consume();
      attach(n, parse_expression(), Role::Condition);
      if (is(":")) {
        consume();
        attach(n, parse_expression(), Role::Value);
      }
      expect(";");
      return close(n);
    }
    if (is("class") || is("interface") || is("enum") || is("abstract") || is("static") ||
        (is("record") && is_ident_at(pos_ + 1) && is_at(pos_ + 2, "("))) {
      unsupported("local type declaration");
    }
    if (is("final") && (is_at(pos_ + 1, "class") || is_at(pos_ + 1, "record"))) {
      unsupported("local type declaration");
    }
    if (is("yield") && !is_at(pos_ + 1, "=") && !is_at(pos_ + 1, "(")) {
      unsupported("yield statement");
    }
    if (is("else") || is("case") || is("default") || is("catch") || is("finally")) {
      fail("unexpected '" + std::string(cur().text) + "'");
    }
    if (is_ident() && is_at(pos_ + 1, ":")) {
      const NodeId n = start(NodeKind::Labeled);
      nodes_[n].text = expect_ident();
      expect(":");
      attach(n, parse_statement(), Role::Body);
      return close(n);
    }
    if (local_var_decl_ahead()) {
      const NodeId n = parse_local_var_decl();
      expect(";");
      return close(n);
    }
    const NodeId n = start(NodeKind::ExprStmt);
    attach(n, parse_expression(), Role::Value);
    expect(";");
    return close(n);
  }

  NodeId parse_if() {
    const NodeId n = start(NodeKind::If);
    expect("if");
    expect("(");
    attach(n, parse_expression(), Role::Condition);
    expect(")");
    attach(n, parse_statement(), Role::Then);
    if (is("else")) {
      consume();
      attach(n, parse_statement(), Role::Else);
    }
    return close(n);
  }

  NodeId parse_for() {
    const std::size_t begin = cur().offset;
    expect("for");
    expect("(");
    // Enhanced for: [final|@A] Type name :
    {
      std::size_t i = skip_modifiers(pos_);
      auto e = scan_type(i);
      if (e && is_ident_at(*e) && is_at(*e + 1, ":")) {
        const NodeId n = make(NodeKind::ForEach, begin);
        attach(n, parse_local_var_decl(false), Role::Init);
        expect(":");
        attach(n, parse_expression(), Role::Iterable);
        expect(")");
        attach(n, parse_statement(), Role::Body);
        return close(n);
      }
    }
    const NodeId n = make(NodeKind::For, begin);
    if (!is(";")) {
      if (local_var_decl_ahead()) {
        attach(n, parse_local_var_decl(), Role::Init);
      } else {
        while (true) {
          attach(n, parse_expression(), Role::Init);
          if (is(",")) {
            consume();
            continue;
          }
          break;
        }
      }
    }
    expect(";");
    if (!is(";")) attach(n, parse_expression(), Role::Condition);
    expect(";");
    if (!is(")")) {
      while (true) {
        attach(n, parse_expression(), Role::Update);
        if (is(",")) {
          consume();
          continue;
        }
        break;
      }
    }
    expect(")");
    attach(n, parse_statement(), Role::Body);
    return close(n);
  }

  NodeId parse_switch() {
    const NodeId n = start(NodeKind::Switch);
    expect("switch");
    expect("(");
    attach(n, parse_expression(), Role::Selector);
    expect(")");
    expect("{");
    while (!is("}")) {
      if (cur().eof) fail("unterminated switch");
      const NodeId g = start(NodeKind::SwitchGroup);
      bool arrow = false;
      if (!is("case") && !is("default")) fail("expected 'case' or 'default'");
      while (is("case") || is("default")) {
        const NodeId label = start(NodeKind::CaseLabel);
        nodes_[label].text = std::string(cur().text);
        const bool is_case = is("case");
        consume();
        if (is_case) {
          while (true) {
            attach(label, parse_ternary(), Role::Value);
            if (is(",")) {
              consume();
              continue;
            }
            break;
          }
        }
        if (is("->")) {
          arrow = true;
          consume();
          attach(g, close(label), Role::Label);
          break;
        }
        expect(":");
        attach(g, close(label), Role::Label);
      }
      if (arrow) {
        nodes_[g].text = "->";
        if (is("{")) {
          attach(g, parse_block(), Role::Body);
        } else if (is("throw")) {
          attach(g, parse_statement(), Role::Body);
        } else {
          const NodeId s = start(NodeKind::ExprStmt);
          attach(s, parse_expression(), Role::Value);
          expect(";");
          attach(g, close(s), Role::Body);
        }
      } else {
        nodes_[g].text = ":";
        while (!is("case") && !is("default") && !is("}")) {
          if (cur().eof) fail("unterminated switch");
          attach(g, parse_statement(), Role::Body);
        }
      }
      attach(n, close(g), Role::Body);
    }
    expect("}");
    return close(n);
  }

  NodeId parse_try() {
    const NodeId n = start(NodeKind::Try);
    expect("try");
    if (is("(")) {
      consume();
      while (!is(")")) {
        const NodeId r = start(NodeKind::Resource);
        if (local_var_decl_ahead()) {
          attach(r, parse_local_var_decl(), Role::Value);
        } else {
          attach(r, parse_expression(), Role::Value);
        }
        attach(n, close(r), Role::Resource);
        if (is(";")) {
          consume();
          continue;
        }
        if (!is(")")) fail("expected ';' or ')' in resource list");
      }
      expect(")");
    }
    attach(n, parse_block(), Role::Body);
    while (is("catch")) {
      const NodeId c = start(NodeKind::CatchClause);
      consume();
      expect("(");
      const NodeId mods = parse_modifiers(false);
      if (mods != kNoNode) attach(c, mods, Role::Modifier);
      while (true) {
        attach(c, parse_type(), Role::Type);
        if (is("|")) {
          consume();
          continue;
        }
        break;
      }
      nodes_[c].text = expect_ident();
      expect(")");
      attach(c, parse_block(), Role::Body);
      attach(n, close(c), Role::Catch);
    }
    if (is("finally")) {
      const NodeId f = start(NodeKind::Finally);
      consume();
      attach(f, parse_block(), Role::Body);
      attach(n, close(f), Role::Finally);
    }
    if (nodes_[n].children.size() == 1 && !has_role(n, Role::Resource)) {
      fail("'try' without 'catch' or 'finally'");
    }
    return close(n);
  }

  bool has_role(NodeId id, Role role) const {
    for (const NodeId c : nodes_[id].children) {
      if (nodes_[c].role == role) return true;
    }
    return false;
  }

  // ---- expressions --------------------------------------------------------

  NodeId parse_expression() {
    if (lambda_ahead()) return parse_lambda();
    const NodeId lhs = parse_ternary();
    auto [op, width] = op_at(pos_);
    if (width > 0 && is_assign_op(op)) {
      for (std::size_t i = 0; i < width; ++i) consume();
      const NodeId n = wrap(NodeKind::Assign, lhs, Role::Left);
      nodes_[n].text = op;
      attach(n, parse_expression(), Role::Right);
      return close(n);
    }
    return lhs;
  }

  NodeId parse_lambda() {
    const NodeId n = start(NodeKind::Lambda);
    if (is_ident()) {
      const NodeId p = start(NodeKind::Parameter);
      nodes_[p].text = expect_ident();
      attach(n, close(p), Role::Param);
    } else {
      expect("(");
      while (!is(")")) {
        if (is_ident() && (is_at(pos_ + 1, ",") || is_at(pos_ + 1, ")"))) {
          const NodeId p = start(NodeKind::Parameter);
          nodes_[p].text = expect_ident();
          attach(n, close(p), Role::Param);
        } else {
          attach(n, parse_parameter(), Role::Param);
        }
        if (is(",")) {
          consume();
          continue;
        }
        if (!is(")")) fail("expected ',' or ')' in lambda parameters");
      }
      expect(")");
    }
    expect("->");
    attach(n, is("{") ? parse_block() : parse_expression(), Role::Body);
    return close(n);
  }

  NodeId parse_ternary() {
    const NodeId cond = parse_binary(1);
    if (!is("?")) return cond;
    consume();
    const NodeId n = wrap(NodeKind::Ternary, cond, Role::Condition);
    attach(n, parse_expression(), Role::Then);
    expect(":");
    attach(n, lambda_ahead() ? parse_lambda() : parse_ternary(), Role::Else);
    return close(n);
  }

  NodeId parse_binary(int min_prec) {
    NodeId left = parse_unary();
    while (true) {
      auto [op, width] = op_at(pos_);
      if (is("instanceof")) {
        op = "instanceof";
        width = 1;
      }
      const int prec = width > 0 ? binary_precedence(op) : -1;
      if (prec < 0 || prec < min_prec) break;
      for (std::size_t i = 0; i < width; ++i) consume();
      if (op == "instanceof") {
        const NodeId n = wrap(NodeKind::InstanceOf, left, Role::Left);
        if (is("final")) consume();
        attach(n, parse_type(), Role::Type);
        if (is_ident()) nodes_[n].text = expect_ident();  // pattern binding
        left = close(n);
        continue;
      }
      const NodeId n = wrap(NodeKind::Binary, left, Role::Left);
      nodes_[n].text = op;
      attach(n, parse_binary(prec + 1), Role::Right);
      left = close(n);
    }
    return left;
  }

  bool cast_ahead() const {
    if (!is("(")) return false;
    const std::size_t i = pos_ + 1;
    if (at(i).kind == TokenKind::Keyword && is_primitive(at(i).text)) {
      auto e = scan_type(i);
      return e && is_at(*e, ")");
    }
    if (!is_ident_at(i) && !is_at(i, "@")) return false;
    auto e = scan_type(i);
    if (!e || !is_at(*e, ")")) return false;
    const PTok& next = at(*e + 1);
    if (next.eof) return false;
    if (next.kind == TokenKind::Identifier || next.kind == TokenKind::Literal) return true;
    if (next.kind == TokenKind::Keyword) {
      return next.text == "this" || next.text == "super" || next.text == "new" ||
             is_primitive(next.text) || next.text == "switch";
    }
    return is_at(*e + 1, "(") || is_at(*e + 1, "!") || is_at(*e + 1, "~");
  }

  NodeId parse_unary() {
    auto [op, width] = op_at(pos_);
    if (width == 1 && (op == "+" || op == "-" || op == "++" || op == "--" || op == "!" || op == "~")) {
      const NodeId n = start(NodeKind::Unary);
      nodes_[n].text = op;
      consume();
      attach(n, parse_unary(), Role::Operand);
      return close(n);
    }
    if (cast_ahead()) {
      const NodeId n = start(NodeKind::Cast);
      expect("(");
      attach(n, parse_type(), Role::Type);
      expect(")");
      attach(n, lambda_ahead() ? parse_lambda() : parse_unary(), Role::Operand);
      return close(n);
    }
    return parse_postfix(parse_primary());
  }

  void parse_arguments(NodeId call) {
    expect("(");
    if (!is(")")) {
      while (true) {
        attach(call, parse_expression(), Role::Argument);
        if (is(",")) {
          consume();
          continue;
        }
        break;
      }
    }
    expect(")");
  }

  NodeId parse_postfix(NodeId expr) {
    while (true) {
      if (is(".")) {
        consume();
        if (is("<")) {
          const NodeId targs = parse_type_args();
          const NodeId n = wrap(NodeKind::Call, expr, Role::Target);
          attach(n, targs, Role::TypeArg);
          nodes_[n].text = expect_ident();
          parse_arguments(n);
          expr = close(n);
        } else if (is("class")) {
          consume();
          const NodeId n = wrap(NodeKind::ClassLit, expr, Role::Target);
          expr = close(n);
        } else if (is("this") || is("super")) {
          const NodeId n = wrap(NodeKind::FieldAccess, expr, Role::Target);
          nodes_[n].text = std::string(cur().text);
          consume();
          if (is("(")) {
            nodes_[n].kind = NodeKind::Call;
            parse_arguments(n);
          }
          expr = close(n);
        } else if (is("new")) {
          unsupported("qualified instance creation");
        } else {
          const std::string name = expect_ident();
          if (is("(")) {
            const NodeId n = wrap(NodeKind::Call, expr, Role::Target);
            nodes_[n].text = name;
            parse_arguments(n);
            expr = close(n);
          } else {
            const NodeId n = wrap(NodeKind::FieldAccess, expr, Role::Target);
            nodes_[n].text = name;
            expr = close(n);
          }
        }
      } else if (is("[")) {
        if (is_at(pos_ + 1, "]")) {
          // Array type in a class literal or method reference: T[].class, T[]::new
          const NodeId type = wrap(NodeKind::Type, expr, Role::Target);
          while (is("[") && is_at(pos_ + 1, "]")) {
            consume();
            consume();
          }
          close(type);
          nodes_[type].text = compact_text(nodes_[type].span.begin, nodes_[type].span.end);
          expr = type;
          if (is(".") && is_at(pos_ + 1, "class")) {
            consume();
            consume();
            expr = close(wrap(NodeKind::ClassLit, expr, Role::Target));
            continue;
          }
          if (!is("::")) fail("expected '.class' or '::' after array type");
          continue;
        }
        consume();
        const NodeId n = wrap(NodeKind::ArrayAccess, expr, Role::Target);
        attach(n, parse_expression(), Role::Argument);
        expect("]");
        expr = close(n);
      } else if (is("::")) {
        consume();
        const NodeId n = wrap(NodeKind::MethodRef, expr, Role::Target);
        if (is("new")) {
          nodes_[n].text = "new";
          consume();
        } else {
          nodes_[n].text = expect_ident();
        }
        expr = close(n);
      } else if (is("++") || is("--")) {
        const NodeId n = wrap(NodeKind::Postfix, expr, Role::Operand);
        nodes_[n].text = std::string(cur().text);
        consume();
        expr = close(n);
      } else {
        return expr;
      }
    }
  }

  NodeId parse_array_init() {
    const NodeId n = start(NodeKind::ArrayInit);
    expect("{");
    while (!is("}")) {
      attach(n, is("{") ? parse_array_init() : parse_expression(), Role::Argument);
      if (is(",")) {
        consume();
        continue;
      }
      if (!is("}")) fail("expected ',' or '}' in array initializer");
    }
    expect("}");
    return close(n);
  }

  NodeId parse_creation() {
    const NodeId n = start(NodeKind::ObjectCreation);
    expect("new");
    if (is("<")) unsupported("constructor type arguments");
    const NodeId type = parse_type(false);
    if (is("[")) {
      nodes_[n].kind = NodeKind::ArrayCreation;
      attach(n, type, Role::Type);
      while (is("[")) {
        consume();
        if (is("]")) {
          consume();
          continue;
        }
        attach(n, parse_expression(), Role::Dim);
        expect("]");
      }
      if (is("{")) attach(n, parse_array_init(), Role::Init);
      return close(n);
    }
    attach(n, type, Role::Type);
    parse_arguments(n);
    if (is("{")) {
      const NodeId body = start(NodeKind::AnonymousBody);
      auto close_idx = matching_close(pos_, "{", "}");
      if (!close_idx) fail("unterminated anonymous class body");
      while (pos_ <= *close_idx) consume();
      attach(n, close(body), Role::Body);
    }
    return close(n);
  }

  NodeId parse_primary() {
    const PTok& t = cur();
    if (t.eof) fail("expected expression but found end of input");
    if (t.kind == TokenKind::Literal) {
      const NodeId n = start(NodeKind::Literal);
      nodes_[n].text = std::string(t.text);
      consume();
      return close(n);
    }
    if (is("this") || is("super")) {
      const bool is_this = is("this");
      const NodeId n = start(is_this ? NodeKind::This : NodeKind::Super);
      nodes_[n].text = std::string(t.text);
      consume();
      if (is("(")) {
        // Explicit constructor invocation: this(...) / super(...)
        nodes_[n].kind = NodeKind::Call;
        parse_arguments(n);
      }
      return close(n);
    }
    if (is("(")) {
      const NodeId n = start(NodeKind::Paren);
      consume();
      attach(n, parse_expression(), Role::Value);
      expect(")");
      return close(n);
    }
    if (is("new")) return parse_creation();
    if (is("switch")) unsupported("switch expression");
    if (t.kind == TokenKind::Keyword && (is_primitive(t.text) || t.text == "void")) {
      const NodeId type = parse_type();
      if (is(".") && is_at(pos_ + 1, "class")) {
        consume();
        consume();
        return close(wrap(NodeKind::ClassLit, type, Role::Target));
      }
      if (is("::")) return type;
      fail("unexpected type in expression");
    }
    if (is_ident()) {
      // Generic type followed by :: (List<String>::new) is outside the subset.
      const NodeId n = start(NodeKind::Name);
      nodes_[n].text = expect_ident();
      close(n);
      if (is("(")) {
        nodes_[n].kind = NodeKind::Call;
        parse_arguments(n);
        return close(n);
      }
      return n;
    }
    fail("unexpected '" + std::string(t.text) + "' in expression");
  }

  std::string_view src_;
  std::vector<PTok> toks_;
  PTok eof_;
  std::size_t pos_ = 0;
  std::size_t last_end_ = 0;
  std::vector<Node> nodes_;
};

}  // namespace

MethodUnit parse_method(std::string_view text) {
  MethodUnit unit;
  unit.source = std::string(text);
  unit.tokens = tokenize(unit.source);
  Parser parser(unit.source, unit.tokens);
  unit.tree = std::make_shared<const SyntaxTree>(parser.parse_method_tree());
  unit.qualified_name = unit.name();
  unit.file_span = Span{0, unit.source.size()};
  unit.sloc = sloc(unit.source);
  unit.token_count = 0;
  for (const Token& tok : unit.tokens) unit.token_count += tok.significant() ? 1 : 0;
  return unit;
}

}  // namespace simplikit
