#include <sstream>

#include "simplikit/syntax.hpp"

namespace simplikit {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::MethodDecl: return "method-decl";
    case NodeKind::Modifiers: return "modifiers";
    case NodeKind::Annotation: return "annotation";
    case NodeKind::TypeParams: return "type-params";
    case NodeKind::Parameter: return "parameter";
    case NodeKind::Type: return "type";
    case NodeKind::TypeArgs: return "type-args";
    case NodeKind::ImportDecl: return "import-decl";
    case NodeKind::Block: return "block";
    case NodeKind::LocalVarDecl: return "local-var-decl";
    case NodeKind::VarDeclarator: return "var-declarator";
    case NodeKind::ExprStmt: return "expr-stmt";
    case NodeKind::If: return "if";
    case NodeKind::For: return "for";
    case NodeKind::ForEach: return "foreach";
    case NodeKind::While: return "while";
    case NodeKind::Do: return "do";
    case NodeKind::Switch: return "switch";
    case NodeKind::SwitchGroup: return "switch-group";
    case NodeKind::CaseLabel: return "case-label";
    case NodeKind::Try: return "try";
    case NodeKind::Resource: return "resource";
    case NodeKind::CatchClause: return "catch-clause";
    case NodeKind::Finally: return "finally";
    case NodeKind::Return: return "return";
    case NodeKind::Throw: return "throw";
    case NodeKind::Break: return "break";
    case NodeKind::Continue: return "continue";
    case NodeKind::Labeled: return "labeled";
    case NodeKind::Empty: return "empty";
    case NodeKind::Synchronized: return "synchronized";
    case NodeKind::Assert: return "assert";
    case NodeKind::Assign: return "assign";
    case NodeKind::Binary: return "binary";
    case NodeKind::Unary: return "unary";
    case NodeKind::Postfix: return "postfix";
    case NodeKind::Ternary: return "ternary";
    case NodeKind::InstanceOf: return "instanceof";
    case NodeKind::Cast: return "cast";
    case NodeKind::Call: return "call";
    case NodeKind::FieldAccess: return "field-access";
    case NodeKind::ArrayAccess: return "array-access";
    case NodeKind::ObjectCreation: return "object-creation";
    case NodeKind::ArrayCreation: return "array-creation";
    case NodeKind::ArrayInit: return "array-init";
    case NodeKind::AnonymousBody: return "anonymous-body";
    case NodeKind::Lambda: return "lambda";
    case NodeKind::MethodRef: return "method-ref";
    case NodeKind::Literal: return "literal";
    case NodeKind::Name: return "name";
    case NodeKind::This: return "this";
    case NodeKind::Super: return "super";
    case NodeKind::ClassLit: return "class-literal";
    case NodeKind::Paren: return "paren";
  }
  return "unknown";
}

NodeId SyntaxTree::child(NodeId id, Role role) const {
  for (const NodeId c : nodes_.at(id).children) {
    if (nodes_[c].role == role) return c;
  }
  return kNoNode;
}

std::vector<NodeId> SyntaxTree::children(NodeId id, Role role) const {
  std::vector<NodeId> out;
  for (const NodeId c : nodes_.at(id).children) {
    if (nodes_[c].role == role) out.push_back(c);
  }
  return out;
}

void SyntaxTree::visit(NodeId id, const std::function<void(NodeId)>& fn) const {
  fn(id);
  for (const NodeId c : nodes_.at(id).children) visit(c, fn);
}

std::vector<NodeId> SyntaxTree::descendants(NodeId id, NodeKind kind) const {
  std::vector<NodeId> out;
  visit(id, [&](NodeId n) {
    if (nodes_[n].kind == kind) out.push_back(n);
  });
  return out;
}

bool SyntaxTree::is_within(NodeId id, NodeId ancestor) const {
  for (NodeId n = id; n != kNoNode; n = nodes_.at(n).parent) {
    if (n == ancestor) return true;
  }
  return false;
}

NodeId MethodUnit::body() const { return tree->child(tree->root(), Role::Body); }

bool MethodUnit::returns_void() const {
  const NodeId type = tree->child(tree->root(), Role::ResultType);
  return type == kNoNode || (*tree)[type].text == "void";
}

std::string print(const MethodUnit& unit) { return unit.source; }

namespace {

class CanonicalPrinter {
 public:
  explicit CanonicalPrinter(const MethodUnit& unit) : u_(unit), t_(*unit.tree) {}

  std::string method() {
    const NodeId root = t_.root();
    std::string head;
    for (const NodeId c : t_[root].children) {
      const Node& n = t_[c];
      switch (n.role) {
        case Role::Modifier: head += modifiers(c) + " "; break;
        case Role::TypeParam: head += compact(c) + " "; break;
        case Role::ResultType: head += n.text + " "; break;
        default: break;
      }
    }
    head += t_[root].text + "(";
    bool first = true;
    for (const NodeId p : t_.children(root, Role::Param)) {
      if (!first) head += ", ";
      first = false;
      head += parameter(p);
    }
    head += ")";
    first = true;
    for (const NodeId th : t_.children(root, Role::Throws)) {
      head += first ? " throws " : ", ";
      first = false;
      head += t_[th].text;
    }
    const NodeId body = t_.child(root, Role::Body);
    if (body == kNoNode) return head + ";\n";
    out_ << head << " ";
    block(body, 0);
    out_ << "\n";
    return out_.str();
  }

  std::string expr(NodeId id) {
    const Node& n = t_[id];
    auto kid = [&](Role r) { return t_.child(id, r); };
    switch (n.kind) {
      case NodeKind::Assign:
      case NodeKind::Binary:
        return expr(kid(Role::Left)) + " " + n.text + " " + expr(kid(Role::Right));
      case NodeKind::Unary: return n.text + expr(kid(Role::Operand));
      case NodeKind::Postfix: return expr(kid(Role::Operand)) + n.text;
      case NodeKind::Ternary:
        return expr(kid(Role::Condition)) + " ? " + expr(kid(Role::Then)) + " : " +
               expr(kid(Role::Else));
      case NodeKind::InstanceOf: {
        std::string s = expr(kid(Role::Left)) + " instanceof " + t_[kid(Role::Type)].text;
        if (!n.text.empty()) s += " " + n.text;
        return s;
      }
      case NodeKind::Cast:
        return "(" + t_[kid(Role::Type)].text + ") " + expr(kid(Role::Operand));
      case NodeKind::Call: {
        std::string s;
        const NodeId target = kid(Role::Target);
        if (target != kNoNode) s += expr(target) + ".";
        const NodeId targs = kid(Role::TypeArg);
        if (targs != kNoNode) s += compact(targs);
        return s + n.text + arguments(id);
      }
      case NodeKind::FieldAccess: return expr(kid(Role::Target)) + "." + n.text;
      case NodeKind::ArrayAccess:
        return expr(kid(Role::Target)) + "[" + expr(kid(Role::Argument)) + "]";
      case NodeKind::ObjectCreation: {
        std::string s = "new " + t_[kid(Role::Type)].text + arguments(id);
        const NodeId body = kid(Role::Body);
        if (body != kNoNode) s += " " + std::string(u_.text(body));
        return s;
      }
      case NodeKind::ArrayInit: {
        std::string s = "{";
        bool first = true;
        for (const NodeId c : n.children) {
          if (!first) s += ", ";
          first = false;
          s += expr(c);
        }
        return s + "}";
      }
      case NodeKind::Lambda: {
        const auto params = t_.children(id, Role::Param);
        std::string s;
        if (params.size() == 1 && t_[params[0]].span.begin == n.span.begin) {
          s = t_[params[0]].text;
        } else {
          s = "(";
          for (std::size_t i = 0; i < params.size(); ++i) {
            if (i > 0) s += ", ";
            s += parameter(params[i]);
          }
          s += ")";
        }
        const NodeId body = kid(Role::Body);
        s += " -> ";
        s += t_[body].kind == NodeKind::Block ? compact(body) : expr(body);
        return s;
      }
      case NodeKind::MethodRef: return expr(kid(Role::Target)) + "::" + n.text;
      case NodeKind::ClassLit: return expr(kid(Role::Target)) + ".class";
      case NodeKind::Paren: return "(" + expr(kid(Role::Value)) + ")";
      case NodeKind::Type: return n.text;
      case NodeKind::Literal:
      case NodeKind::Name:
      case NodeKind::This:
      case NodeKind::Super: return n.text;
      default: return compact(id);
    }
  }

 private:
  std::string arguments(NodeId call) {
    std::string s = "(";
    bool first = true;
    for (const NodeId a : t_.children(call, Role::Argument)) {
      if (!first) s += ", ";
      first = false;
      s += expr(a);
    }
    return s + ")";
  }

  std::string compact(NodeId id) { return compact_range(t_[id].span.begin, t_[id].span.end); }

  std::string compact_range(std::size_t begin, std::size_t end) {
    std::string s;
    const Span span{begin, end};
    const Token* prev = nullptr;
    for (const Token& tok : u_.tokens) {
      if (!tok.significant() || tok.offset < span.begin || tok.end() > span.end) continue;
      if (prev != nullptr && needs_space(*prev, tok)) s += ' ';
      s += tok.text;
      prev = &tok;
    }
    return s;
  }

  static bool needs_space(const Token& a, const Token& b) {
    auto wordy = [](const Token& t) {
      return t.kind == TokenKind::Identifier || t.kind == TokenKind::Keyword ||
             t.kind == TokenKind::Literal;
    };
    if (wordy(a) && wordy(b)) return true;
    if (b.text == ";" || b.text == "," || b.text == ")" || b.text == "]" || b.text == "." ||
        a.text == "(" || a.text == "[" || a.text == "." || a.text == "@") {
      return false;
    }
    if (a.text == "," || a.text == ";" || a.text == "{" || b.text == "{" || b.text == "}") return true;
    return a.kind == TokenKind::Operator || b.kind == TokenKind::Operator;
  }

  std::string modifiers(NodeId id) { return compact(id); }

  std::string parameter(NodeId p) {
    std::string s;
    const NodeId mods = t_.child(p, Role::Modifier);
    if (mods != kNoNode) s += modifiers(mods) + " ";
    const NodeId type = t_.child(p, Role::Type);
    if (type == kNoNode) return s + t_[p].text;
    // Name plus any array dimensions written after it.
    return s + t_[type].text + " " + compact_range(t_[type].span.end, t_[p].span.end);
  }

  void indent(int level) {
    for (int i = 0; i < level; ++i) out_ << "    ";
  }

  void block(NodeId id, int level) {
    out_ << "{\n";
    for (const NodeId s : t_[id].children) statement(s, level + 1);
    indent(level);
    out_ << "}";
  }

  // Body of a control statement: a block continues the header line,
  // anything else goes on its own indented line.
  void body(NodeId id, int level) {
    if (t_[id].kind == NodeKind::Block) {
      out_ << " ";
      block(id, level);
    } else {
      out_ << "\n";
      statement_inline(id, level + 1);
    }
  }

  void statement(NodeId id, int level) {
    statement_inline(id, level);
    out_ << "\n";
  }

  std::string var_decl(NodeId id) {
    std::string s;
    const NodeId mods = t_.child(id, Role::Modifier);
    if (mods != kNoNode) s += modifiers(mods) + " ";
    s += t_[t_.child(id, Role::Type)].text + " ";
    bool first = true;
    for (const NodeId d : t_.children(id, Role::Declarator)) {
      if (!first) s += ", ";
      first = false;
      const NodeId init = t_.child(d, Role::Init);
      if (init != kNoNode) {
        s += compact_range(t_[d].span.begin, t_[init].span.begin) + " " + expr(init);
      } else {
        s += compact(d);
      }
    }
    return s;
  }

  void statement_inline(NodeId id, int level) {
    const Node& n = t_[id];
    indent(level);
    auto kid = [&](Role r) { return t_.child(id, r); };
    switch (n.kind) {
      case NodeKind::Block: block(id, level); return;
      case NodeKind::LocalVarDecl: out_ << var_decl(id) << ";"; return;
      case NodeKind::ExprStmt: out_ << expr(kid(Role::Value)) << ";"; return;
      case NodeKind::If: {
        out_ << "if (" << expr(kid(Role::Condition)) << ")";
        const NodeId then = kid(Role::Then);
        body(then, level);
        const NodeId els = kid(Role::Else);
        if (els != kNoNode) {
          if (t_[then].kind == NodeKind::Block) {
            out_ << " else";
          } else {
            out_ << "\n";
            indent(level);
            out_ << "else";
          }
          if (t_[els].kind == NodeKind::If) {
            out_ << " ";
            std::ostringstream saved;
            saved.swap(out_);
            statement_inline(els, 0);
            std::string nested = out_.str();
            out_.swap(saved);
            // Re-indent the nested chain to the current level.
            std::string fixed;
            for (std::size_t i = 0; i < nested.size(); ++i) {
              fixed += nested[i];
              if (nested[i] == '\n') fixed += std::string(static_cast<std::size_t>(level) * 4, ' ');
            }
            out_ << fixed;
          } else {
            body(els, level);
          }
        }
        return;
      }
      case NodeKind::For: {
        out_ << "for (";
        const auto inits = t_.children(id, Role::Init);
        for (std::size_t i = 0; i < inits.size(); ++i) {
          if (i > 0) out_ << ", ";
          out_ << (t_[inits[i]].kind == NodeKind::LocalVarDecl ? var_decl(inits[i]) : expr(inits[i]));
        }
        out_ << ";";
        const NodeId cond = kid(Role::Condition);
        if (cond != kNoNode) out_ << " " << expr(cond);
        out_ << ";";
        const auto updates = t_.children(id, Role::Update);
        for (std::size_t i = 0; i < updates.size(); ++i) out_ << (i > 0 ? ", " : " ") << expr(updates[i]);
        out_ << ")";
        body(kid(Role::Body), level);
        return;
      }
      case NodeKind::ForEach:
        out_ << "for (" << var_decl(kid(Role::Init)) << " : " << expr(kid(Role::Iterable)) << ")";
        body(kid(Role::Body), level);
        return;
      case NodeKind::While:
        out_ << "while (" << expr(kid(Role::Condition)) << ")";
        body(kid(Role::Body), level);
        return;
      case NodeKind::Do:
        out_ << "do";
        body(kid(Role::Body), level);
        out_ << (t_[kid(Role::Body)].kind == NodeKind::Block ? " " : "\n");
        if (t_[kid(Role::Body)].kind != NodeKind::Block) indent(level);
        out_ << "while (" << expr(kid(Role::Condition)) << ");";
        return;
      case NodeKind::Switch: {
        out_ << "switch (" << expr(kid(Role::Selector)) << ") {\n";
        for (const NodeId g : t_.children(id, Role::Body)) {
          const bool arrow = t_[g].text == "->";
          for (const NodeId label : t_.children(g, Role::Label)) {
            indent(level + 1);
            if (t_[label].text == "default") {
              out_ << "default";
            } else {
              out_ << "case ";
              bool first = true;
              for (const NodeId v : t_.children(label, Role::Value)) {
                if (!first) out_ << ", ";
                first = false;
                out_ << expr(v);
              }
            }
            out_ << (arrow ? " ->" : ":") << (arrow ? "" : "\n");
          }
          const auto stmts = t_.children(g, Role::Body);
          if (arrow && !stmts.empty()) {
            std::ostringstream saved;
            saved.swap(out_);
            statement_inline(stmts[0], level + 1);
            std::string s = out_.str();
            out_.swap(saved);
            out_ << " " << s.substr(static_cast<std::size_t>(level + 1) * 4) << "\n";
          } else {
            for (const NodeId s : stmts) statement(s, level + 2);
          }
        }
        indent(level);
        out_ << "}";
        return;
      }
      case NodeKind::Try: {
        out_ << "try ";
        const auto resources = t_.children(id, Role::Resource);
        if (!resources.empty()) {
          out_ << "(";
          for (std::size_t i = 0; i < resources.size(); ++i) {
            if (i > 0) out_ << "; ";
            const NodeId v = t_.child(resources[i], Role::Value);
            out_ << (t_[v].kind == NodeKind::LocalVarDecl ? var_decl(v) : expr(v));
          }
          out_ << ") ";
        }
        block(kid(Role::Body), level);
        for (const NodeId c : t_.children(id, Role::Catch)) {
          out_ << " catch (";
          const NodeId mods = t_.child(c, Role::Modifier);
          if (mods != kNoNode) out_ << modifiers(mods) << " ";
          bool first = true;
          for (const NodeId ty : t_.children(c, Role::Type)) {
            if (!first) out_ << " | ";
            first = false;
            out_ << t_[ty].text;
          }
          out_ << " " << t_[c].text << ") ";
          block(t_.child(c, Role::Body), level);
        }
        const NodeId fin = kid(Role::Finally);
        if (fin != kNoNode) {
          out_ << " finally ";
          block(t_.child(fin, Role::Body), level);
        }
        return;
      }
      case NodeKind::Return: {
        const NodeId v = kid(Role::Value);
        out_ << "return" << (v != kNoNode ? " " + expr(v) : "") << ";";
        return;
      }
      case NodeKind::Throw: out_ << "throw " << expr(kid(Role::Value)) << ";"; return;
      case NodeKind::Break:
      case NodeKind::Continue:
        out_ << (n.kind == NodeKind::Break ? "break" : "continue")
             << (n.text.empty() ? "" : " " + n.text) << ";";
        return;
      case NodeKind::Labeled: {
        out_ << n.text << ":\n";
        statement_inline(kid(Role::Body), level);
        return;
      }
      case NodeKind::Empty: out_ << ";"; return;
      case NodeKind::Synchronized:
        out_ << "synchronized (" << expr(kid(Role::Condition)) << ") ";
        block(kid(Role::Body), level);
        return;
      case NodeKind::Assert: {
        out_ << "assert " << expr(kid(Role::Condition));
        const NodeId msg = kid(Role::Value);
        if (msg != kNoNode) out_ << " : " << expr(msg);
        out_ << ";";
        return;
      }
      default: out_ << compact(id); return;
    }
  }

  const MethodUnit& u_;
  const SyntaxTree& t_;
  std::ostringstream out_;
};

}  // namespace

std::string print_canonical(const MethodUnit& unit) { return CanonicalPrinter(unit).method(); }

std::string render_expression(const MethodUnit& unit, NodeId expr) {
  return CanonicalPrinter(unit).expr(expr);
}

}  // namespace simplikit
