#include "simplikit/catalog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "simplikit/diff.hpp"
#include "simplikit/error.hpp"
#include "simplikit/localization.hpp"

namespace simplikit {

namespace {

const std::vector<RuleInfo> kRules = {
    {"T1.1", "Simplify method return", "return an expression directly instead of through a temporary", true, false},
    {"T1.2", "Simplify boolean and algebraic expression", "drop comparisons with boolean literals, double negation, literal ternaries", true, false},
    {"T1.3", "Use foreach in loop iteration", "replace an index loop over a list or array by an enhanced for", true, false},
    {"T1.4", "Merge conditional", "fold nested ifs without else into one if joined by &&", true, false},
    {"T1.5", "Ternary conditional operator", "replace an if/else choosing a value by a ternary", true, false},
    {"T1.6", "Restructure conditional branches", "replace branching by enums or polymorphism", false, false},
    {"T1.7", "Replace with pipeline", "chain operations as a stream pipeline", false, false},
    {"T1.8", "Replace variable with attribute", "turn method locals into fields", false, false},
    {"T1.9", "Merge catch", "merge adjacent catch clauses with identical bodies into a multi-catch", true, false},
    {"T1.10", "Change return type", "make the method void and drop return statements", false, false},
    {"T2.1", "Extract method", "move a block into a new method", false, false},
    {"T2.2", "Extract variable", "introduce a variable for a repeated expression", false, false},
    {"T2.3", "Consolidate duplicate conditional fragments", "hoist code shared by all branches", false, false},
    {"T3.1", "Remove unnecessary code", "delete locals that are never read and have pure initializers", true, false},
    {"T3.2", "Remove unused imports", "delete imports whose name never occurs in the file", true, true},
    {"T3.3", "Clean up dead code blocks", "delete statements after a jump and if (false) branches", true, false},
    {"T4.1", "Replace with equivalent API", "replace hand-written code by a library call", false, false},
    {"T5.1", "Inline variable", "substitute a single-use local with a pure initializer", true, false},
    {"T5.2", "Inline method", "inline a small method used once", false, false},
    {"T6.1", "Use lambda", "replace an anonymous class or loop by a lambda", false, false},
    {"T7.1", "Use diamond operator", "drop type arguments repeated from the declared type", true, false},
    {"T7.2", "Code style reformat", "reformat into a more concise style", false, false},
    {"T7.3", "Use constructor to initialize", "initialize properties through a constructor", false, false},
    {"T7.4", "Merge imports", "replace many imports from one package by a wildcard", true, true},
    {"T7.5", "Replace with annotations", "replace boilerplate by annotations", false, false},
    {"T7.6", "Try-with-resources", "close a resource with try-with-resources instead of finally", true, false},
};

enum class Level { Primary, Unary, Other };

Level level_of(NodeKind k) {
  switch (k) {
    case NodeKind::Name:
    case NodeKind::Literal:
    case NodeKind::Call:
    case NodeKind::FieldAccess:
    case NodeKind::ArrayAccess:
    case NodeKind::Paren:
    case NodeKind::This:
    case NodeKind::Super:
    case NodeKind::ObjectCreation:
    case NodeKind::ArrayCreation:
    case NodeKind::ClassLit:
    case NodeKind::MethodRef:
      return Level::Primary;
    case NodeKind::Unary:
    case NodeKind::Postfix:
      return Level::Unary;
    default:
      return Level::Other;
  }
}

bool is_jump(NodeKind k) {
  return k == NodeKind::Return || k == NodeKind::Throw || k == NodeKind::Break || k == NodeKind::Continue;
}

bool is_loop(NodeKind k) {
  return k == NodeKind::For || k == NodeKind::ForEach || k == NodeKind::While || k == NodeKind::Do;
}

// Result of the boolean simplifier for one expression.
struct BoolExpr {
  std::string text;
  Level level = Level::Primary;
  bool negation = false;  // text is "!" + inner
  std::string inner;
  Level inner_level = Level::Primary;
  bool changed = false;
};

BoolExpr negate(const BoolExpr& e) {
  if (e.negation) return {e.inner, e.inner_level, false, "", Level::Primary, true};
  if (e.level == Level::Other) {
    const std::string p = "(" + e.text + ")";
    return {"!" + p, Level::Unary, true, p, Level::Primary, true};
  }
  return {"!" + e.text, Level::Unary, true, e.text, e.level, true};
}

class Analysis {
 public:
  explicit Analysis(const MethodUnit& u) : u_(u), t_(*u.tree) {
    for (std::size_t i = 0; i < u.tokens.size(); ++i) {
      if (u.tokens[i].significant()) sig_.push_back(i);
    }
  }

  std::vector<Rewrite> all() {
    simplify_return();
    bool_simplify();
    foreach_loop();
    merge_if();
    ternary();
    merge_catch();
    remove_unneeded();
    dead_code();
    inline_variable();
    diamond();
    try_with_resources();
    std::sort(out_.begin(), out_.end(), [](const Rewrite& a, const Rewrite& b) {
      if (a.target.begin != b.target.begin) return a.target.begin < b.target.begin;
      if (a.rule != b.rule) return a.rule < b.rule;
      if (a.target.end != b.target.end) return a.target.end < b.target.end;
      return a.replacement < b.replacement;
    });
    out_.erase(std::unique(out_.begin(), out_.end(),
                           [](const Rewrite& a, const Rewrite& b) {
                             return a.rule == b.rule && a.target == b.target && a.replacement == b.replacement;
                           }),
               out_.end());
    return std::move(out_);
  }

 private:
  // ---- helpers ------------------------------------------------------------

  std::string src(NodeId id) const { return std::string(u_.text(id)); }
  std::string src(Span s) const { return std::string(u_.text(s)); }
  const Node& n(NodeId id) const { return t_[id]; }
  NodeId kid(NodeId id, Role r) const { return t_.child(id, r); }
  Span method_span() const { return t_[t_.root()].span; }

  void emit(const std::string& rule, Span target, std::string replacement, std::string evidence) {
    Rewrite r;
    r.rule = rule;
    r.target = target;
    r.replacement = std::move(replacement);
    r.expected = src(target);
    r.evidence = std::move(evidence);
    out_.push_back(std::move(r));
  }

  NodeId strip_parens(NodeId id) const {
    while (id != kNoNode && n(id).kind == NodeKind::Paren) id = kid(id, Role::Value);
    return id;
  }

  bool is_bool_literal(NodeId id) const {
    return id != kNoNode && n(id).kind == NodeKind::Literal && (n(id).text == "true" || n(id).text == "false");
  }

  // Identifier tokens equal to `name` inside `within`, skipping member
  // selections (`a.name`).
  int ident_uses(std::string_view name, Span within) const {
    int count = 0;
    for (std::size_t k = 0; k < sig_.size(); ++k) {
      const Token& tok = u_.tokens[sig_[k]];
      if (tok.offset < within.begin || tok.end() > within.end) continue;
      if (tok.kind != TokenKind::Identifier || tok.text != name) continue;
      if (k > 0 && u_.tokens[sig_[k - 1]].text == ".") continue;
      ++count;
    }
    return count;
  }

  // Statement lists: block bodies and colon-form switch groups.
  std::vector<std::vector<NodeId>> statement_lists() const {
    std::vector<std::vector<NodeId>> lists;
    for (NodeId id = 0; id < t_.size(); ++id) {
      const Node& node = n(id);
      if (node.kind == NodeKind::Block || (node.kind == NodeKind::SwitchGroup && node.text == ":")) {
        lists.push_back(t_.children(id, Role::Body));
      }
    }
    return lists;
  }

  bool in_list(NodeId stmt) const {
    const NodeId p = n(stmt).parent;
    if (p == kNoNode || n(stmt).role != Role::Body) return false;
    return n(p).kind == NodeKind::Block || (n(p).kind == NodeKind::SwitchGroup && n(p).text == ":");
  }

  // Widens a deletion to whole lines when the span has only blanks around it.
  Span line_extent(Span s) const {
    const std::string& text = u_.source;
    std::size_t b = s.begin;
    while (b > 0 && (text[b - 1] == ' ' || text[b - 1] == '\t')) --b;
    if (b != 0 && text[b - 1] != '\n') return s;
    std::size_t e = s.end;
    while (e < text.size() && (text[e] == ' ' || text[e] == '\t' || text[e] == '\r')) ++e;
    if (e < text.size() && text[e] != '\n') return s;
    if (e < text.size()) ++e;
    return {b, e};
  }

  // The single declarator of a one-variable local declaration.
  NodeId single_declarator(NodeId decl) const {
    if (n(decl).kind != NodeKind::LocalVarDecl) return kNoNode;
    const auto ds = t_.children(decl, Role::Declarator);
    if (ds.size() != 1) return kNoNode;
    // Dimensions after the name (int a[] = ...) change the declared type.
    const NodeId init = kid(ds[0], Role::Init);
    const Span head{n(ds[0]).span.begin, init == kNoNode ? n(ds[0]).span.end : n(init).span.begin};
    if (src(head).find('[') != std::string::npos) return kNoNode;
    return ds[0];
  }

  // Literal, name, field access on names, or a cast/paren of one.
  bool side_effect_free(NodeId e) const {
    if (e == kNoNode) return false;
    const Node& node = n(e);
    switch (node.kind) {
      case NodeKind::Literal:
      case NodeKind::Name:
      case NodeKind::This:
        return true;
      case NodeKind::FieldAccess: {
        const NodeId target = kid(e, Role::Target);
        return target != kNoNode && side_effect_free(target) && n(target).kind != NodeKind::Literal;
      }
      case NodeKind::Cast:
      case NodeKind::Paren:
        return side_effect_free(kid(e, Role::Value)) || side_effect_free(kid(e, Role::Operand));
      case NodeKind::Unary:
        return (node.text == "-" || node.text == "+") && n(kid(e, Role::Operand)).kind == NodeKind::Literal;
      default:
        return false;
    }
  }

  // Names and this-chains read by an expression.
  std::vector<std::string> names_in(NodeId e) const {
    std::vector<std::string> names;
    t_.visit(e, [&](NodeId id) {
      if (n(id).kind == NodeKind::Name) names.push_back(n(id).text);
    });
    return names;
  }

  bool is_local_name(const std::string& name) const {
    for (NodeId id = 0; id < t_.size(); ++id) {
      const NodeKind k = n(id).kind;
      if ((k == NodeKind::VarDeclarator || k == NodeKind::Parameter || k == NodeKind::CatchClause) &&
          n(id).text == name) {
        return true;
      }
    }
    return false;
  }

  bool assigned_anywhere(const std::string& name) const {
    for (NodeId id = 0; id < t_.size(); ++id) {
      const Node& node = n(id);
      NodeId target = kNoNode;
      if (node.kind == NodeKind::Assign) target = kid(id, Role::Left);
      if ((node.kind == NodeKind::Unary && (node.text == "++" || node.text == "--")) ||
          node.kind == NodeKind::Postfix) {
        target = kid(id, Role::Operand);
      }
      target = strip_parens(target);
      if (target != kNoNode && n(target).kind == NodeKind::Name && n(target).text == name) return true;
    }
    return false;
  }

  std::string render(NodeId e) const { return render_expression(u_, e); }

  std::string wrap_if(NodeId e, bool wrap) const { return wrap ? "(" + render(e) + ")" : render(e); }

  bool low_precedence(NodeId e) const {
    const NodeKind k = n(e).kind;
    return k == NodeKind::Assign || k == NodeKind::Ternary || k == NodeKind::Lambda;
  }

  // The statement itself, or the only statement of a block.
  NodeId single_statement(NodeId s) const {
    if (s == kNoNode) return kNoNode;
    if (n(s).kind != NodeKind::Block) return s;
    const auto body = t_.children(s, Role::Body);
    return body.size() == 1 ? body[0] : kNoNode;
  }

  // Name or field-access chain over names/this: safe to evaluate early.
  bool simple_target(NodeId e) const {
    e = strip_parens(e);
    if (e == kNoNode) return false;
    if (n(e).kind == NodeKind::Name || n(e).kind == NodeKind::This) return true;
    if (n(e).kind == NodeKind::FieldAccess) return simple_target(kid(e, Role::Target));
    return false;
  }

  bool same_tokens(NodeId a, NodeId b) const { return token_key(src(a)) == token_key(src(b)); }

  // ---- T1.1 ---------------------------------------------------------------

  void simplify_return() {
    for (const auto& list : statement_lists()) {
      for (std::size_t k = 0; k + 1 < list.size(); ++k) {
        const NodeId decl = single_declarator(list[k]);
        if (decl == kNoNode) continue;
        const NodeId init = kid(decl, Role::Init);
        if (init == kNoNode || n(init).kind == NodeKind::ArrayInit) continue;
        const NodeId ret = list[k + 1];
        if (n(ret).kind != NodeKind::Return) continue;
        const NodeId value = strip_parens(kid(ret, Role::Value));
        if (value == kNoNode || n(value).kind != NodeKind::Name || n(value).text != n(decl).text) continue;
        if (ident_uses(n(decl).text, method_span()) != 2) continue;
        emit("T1.1", {n(list[k]).span.begin, n(ret).span.end}, "return " + render(init) + ";",
             "'" + n(decl).text + "' is only returned");
      }
    }
  }

  // ---- T1.2 ---------------------------------------------------------------

  bool fires(NodeId id) const {
    const Node& node = n(id);
    if (node.kind == NodeKind::Binary && node.text == "==") {
      return is_bool_literal(kid(id, Role::Left)) || is_bool_literal(kid(id, Role::Right));
    }
    if (node.kind == NodeKind::Unary && node.text == "!") {
      // Cancels against a negation below it, written or produced.
      return simplify_bool(kid(id, Role::Operand)).negation;
    }
    if (node.kind == NodeKind::Ternary) {
      const NodeId a = kid(id, Role::Then);
      const NodeId b = kid(id, Role::Else);
      return is_bool_literal(a) && is_bool_literal(b) && n(a).text != n(b).text;
    }
    return false;
  }

  BoolExpr simplify_bool(NodeId id) const {
    const Node& node = n(id);
    if (node.kind == NodeKind::Binary && node.text == "==") {
      const NodeId l = kid(id, Role::Left);
      const NodeId r = kid(id, Role::Right);
      NodeId lit = kNoNode;
      NodeId other = kNoNode;
      if (is_bool_literal(l)) {
        lit = l;
        other = r;
      } else if (is_bool_literal(r)) {
        lit = r;
        other = l;
      }
      if (lit != kNoNode) {
        BoolExpr o = simplify_bool(other);
        BoolExpr res = n(lit).text == "true" ? o : negate(o);
        res.changed = true;
        return res;
      }
    }
    if (node.kind == NodeKind::Unary && node.text == "!") {
      const BoolExpr o = simplify_bool(kid(id, Role::Operand));
      if (o.negation || o.changed) return negate(o);
      return {src(id), Level::Unary, true, o.text, o.level, false};
    }
    if (node.kind == NodeKind::Paren) {
      const BoolExpr in = simplify_bool(kid(id, Role::Value));
      if (in.changed && in.level != Level::Other) return in;
      BoolExpr res = in;
      res.text = in.changed ? "(" + in.text + ")" : src(id);
      res.level = Level::Primary;
      return res;
    }
    if (node.kind == NodeKind::Ternary && fires(id)) {
      const BoolExpr c = simplify_bool(kid(id, Role::Condition));
      BoolExpr res = n(kid(id, Role::Then)).text == "true" ? c : negate(c);
      res.changed = true;
      return res;
    }
    // Anything else: rebuild from simplified children.
    std::vector<std::pair<Span, std::string>> edits;
    for (const NodeId c : node.children) {
      const BoolExpr ce = simplify_bool(c);
      if (ce.changed) edits.emplace_back(n(c).span, ce.text);
    }
    BoolExpr res;
    res.level = level_of(node.kind);
    if (edits.empty()) {
      res.text = src(id);
      return res;
    }
    std::size_t at = node.span.begin;
    for (const auto& [span, text] : edits) {
      res.text += u_.source.substr(at, span.begin - at) + text;
      at = span.end;
    }
    res.text += u_.source.substr(at, node.span.end - at);
    res.changed = true;
    return res;
  }

  void bool_simplify() {
    for (NodeId id = 0; id < t_.size(); ++id) {
      if (!fires(id)) continue;
      bool outermost = true;
      for (NodeId p = n(id).parent; p != kNoNode; p = n(p).parent) {
        if (fires(p)) outermost = false;
      }
      if (!outermost) continue;
      const BoolExpr res = simplify_bool(id);
      if (!res.changed) continue;
      emit("T1.2", n(id).span, res.text, "boolean literal comparison or double negation");
    }
  }

  // ---- T1.3 ---------------------------------------------------------------

  void foreach_loop() {
    for (NodeId id = 0; id < t_.size(); ++id) {
      if (n(id).kind != NodeKind::For) continue;
      const auto inits = t_.children(id, Role::Init);
      const auto updates = t_.children(id, Role::Update);
      const NodeId cond = kid(id, Role::Condition);
      const NodeId body = kid(id, Role::Body);
      if (inits.size() != 1 || updates.size() != 1 || cond == kNoNode || body == kNoNode) continue;
      const NodeId index_decl = single_declarator(inits[0]);
      if (index_decl == kNoNode) continue;
      const NodeId index_type = kid(inits[0], Role::Type);
      if (n(index_type).text != "int") continue;
      const std::string index = n(index_decl).text;
      const NodeId start = kid(index_decl, Role::Init);
      if (start == kNoNode || n(start).kind != NodeKind::Literal || n(start).text != "0") continue;

      // i < xs.size()  or  i < xs.length
      if (n(cond).kind != NodeKind::Binary || n(cond).text != "<") continue;
      const NodeId lhs = kid(cond, Role::Left);
      const NodeId bound = kid(cond, Role::Right);
      if (n(lhs).kind != NodeKind::Name || n(lhs).text != index) continue;
      bool list_form = false;
      if (n(bound).kind == NodeKind::Call && n(bound).text == "size" &&
          t_.children(bound, Role::Argument).empty()) {
        list_form = true;
      } else if (!(n(bound).kind == NodeKind::FieldAccess && n(bound).text == "length")) {
        continue;
      }
      const NodeId coll = kid(bound, Role::Target);
      if (coll == kNoNode || !simple_target(coll)) continue;

      // i++, ++i, i += 1
      const NodeId up = updates[0];
      const Node& upn = n(up);
      NodeId up_target = kNoNode;
      if ((upn.kind == NodeKind::Postfix || upn.kind == NodeKind::Unary) && upn.text == "++") {
        up_target = kid(up, Role::Operand);
      } else if (upn.kind == NodeKind::Assign && upn.text == "+=") {
        const NodeId one = kid(up, Role::Right);
        if (n(one).kind == NodeKind::Literal && n(one).text == "1") up_target = kid(up, Role::Left);
      }
      if (up_target == kNoNode || n(up_target).kind != NodeKind::Name || n(up_target).text != index) continue;

      // Body opens with  T v = xs.get(i);  or  T v = xs[i];
      if (n(body).kind != NodeKind::Block) continue;
      const auto stmts = t_.children(body, Role::Body);
      if (stmts.empty()) continue;
      const NodeId elem_decl = single_declarator(stmts[0]);
      if (elem_decl == kNoNode) continue;
      const NodeId access = kid(elem_decl, Role::Init);
      if (access == kNoNode) continue;
      NodeId access_coll = kNoNode;
      NodeId access_index = kNoNode;
      if (list_form && n(access).kind == NodeKind::Call && n(access).text == "get") {
        const auto args = t_.children(access, Role::Argument);
        if (args.size() != 1) continue;
        access_coll = kid(access, Role::Target);
        access_index = args[0];
      } else if (!list_form && n(access).kind == NodeKind::ArrayAccess) {
        access_coll = kid(access, Role::Target);
        access_index = kid(access, Role::Argument);
        if (access_index == kNoNode) access_index = kid(access, Role::Value);
      } else {
        continue;
      }
      if (access_coll == kNoNode || access_index == kNoNode || !same_tokens(access_coll, coll)) continue;
      if (n(access_index).kind != NodeKind::Name || n(access_index).text != index) continue;

      // The index and the collection appear nowhere else in the body.
      if (ident_uses(index, n(body).span) != 1) continue;
      const NodeId coll_root = strip_parens(coll);
      const std::string coll_name = n(coll_root).kind == NodeKind::Name ? n(coll_root).text : "";
      if (!coll_name.empty() && ident_uses(coll_name, n(body).span) != 1) continue;
      if (coll_name.empty() && src(n(body).span).find(src(coll)) != src(n(body).span).rfind(src(coll))) continue;

      const NodeId elem_stmt = stmts[0];
      const NodeId mods = kid(elem_stmt, Role::Modifier);
      const NodeId elem_type = kid(elem_stmt, Role::Type);
      std::string header = "for (";
      if (mods != kNoNode) header += src(mods) + " ";
      header += src(elem_type) + " " + n(elem_decl).text + " : " + render(coll) + ") {";
      emit("T1.3", {n(id).span.begin, n(elem_stmt).span.end}, header,
           "index '" + index + "' only selects elements of " + src(coll));
    }
  }

  // ---- T1.4 ---------------------------------------------------------------

  void merge_if() {
    for (NodeId id = 0; id < t_.size(); ++id) {
      if (n(id).kind != NodeKind::If || kid(id, Role::Else) != kNoNode) continue;
      const NodeId inner = single_statement(kid(id, Role::Then));
      if (inner == kNoNode || n(inner).kind != NodeKind::If || kid(inner, Role::Else) != kNoNode) continue;
      const NodeId c1 = kid(id, Role::Condition);
      const NodeId c2 = kid(inner, Role::Condition);
      const auto needs_parens = [&](NodeId c) {
        const NodeId s = c;
        return low_precedence(s) || (n(s).kind == NodeKind::Binary && n(s).text == "||");
      };
      const std::string replacement = "if (" + wrap_if(c1, needs_parens(c1)) + " && " +
                                      wrap_if(c2, needs_parens(c2)) + ") " + src(kid(inner, Role::Then));
      emit("T1.4", n(id).span, replacement, "nested ifs without else");
    }
  }

  // ---- T1.5 ---------------------------------------------------------------

  void ternary() {
    for (NodeId id = 0; id < t_.size(); ++id) {
      if (n(id).kind != NodeKind::If) continue;
      const NodeId else_branch = kid(id, Role::Else);
      if (else_branch == kNoNode || n(else_branch).kind == NodeKind::If) continue;
      const NodeId s1 = single_statement(kid(id, Role::Then));
      const NodeId s2 = single_statement(else_branch);
      if (s1 == kNoNode || s2 == kNoNode || n(s1).kind != n(s2).kind) continue;
      const NodeId cond = kid(id, Role::Condition);
      const std::string c = wrap_if(cond, low_precedence(cond));
      if (n(s1).kind == NodeKind::ExprStmt) {
        const NodeId a1 = kid(s1, Role::Value);
        const NodeId a2 = kid(s2, Role::Value);
        if (n(a1).kind != NodeKind::Assign || n(a2).kind != NodeKind::Assign) continue;
        if (n(a1).text != "=" || n(a2).text != "=") continue;
        const NodeId l1 = kid(a1, Role::Left);
        if (!same_tokens(l1, kid(a2, Role::Left)) || !simple_target(l1)) continue;
        const NodeId v1 = kid(a1, Role::Right);
        const NodeId v2 = kid(a2, Role::Right);
        emit("T1.5", n(id).span,
             render(l1) + " = " + c + " ? " + wrap_if(v1, low_precedence(v1)) + " : " +
                 wrap_if(v2, low_precedence(v2)) + ";",
             "both branches assign " + src(l1));
      } else if (n(s1).kind == NodeKind::Return) {
        const NodeId v1 = kid(s1, Role::Value);
        const NodeId v2 = kid(s2, Role::Value);
        if (v1 == kNoNode || v2 == kNoNode) continue;
        emit("T1.5", n(id).span,
             "return " + c + " ? " + wrap_if(v1, low_precedence(v1)) + " : " +
                 wrap_if(v2, low_precedence(v2)) + ";",
             "both branches return a value");
      }
    }
  }

  // ---- T1.9 ---------------------------------------------------------------

  void merge_catch() {
    for (NodeId id = 0; id < t_.size(); ++id) {
      if (n(id).kind != NodeKind::Try) continue;
      const auto catches = t_.children(id, Role::Catch);
      for (std::size_t k = 0; k + 1 < catches.size(); ++k) {
        const NodeId a = catches[k];
        const NodeId b = catches[k + 1];
        if (kid(a, Role::Modifier) != kNoNode || kid(b, Role::Modifier) != kNoNode) continue;
        if (n(a).text != n(b).text) continue;
        const NodeId body = kid(a, Role::Body);
        if (!same_tokens(body, kid(b, Role::Body))) continue;
        std::string types;
        for (const NodeId c : {a, b}) {
          for (const NodeId t : t_.children(c, Role::Type)) {
            if (!types.empty()) types += " | ";
            types += n(t).text;
          }
        }
        emit("T1.9", {n(a).span.begin, n(b).span.end}, "catch (" + types + " " + n(a).text + ") " + src(body),
             "identical handler bodies");
      }
    }
  }

  // ---- T3.1 ---------------------------------------------------------------

  void remove_unneeded() {
    for (const auto& list : statement_lists()) {
      for (const NodeId stmt : list) {
        const NodeId decl = single_declarator(stmt);
        if (decl == kNoNode) continue;
        const NodeId init = kid(decl, Role::Init);
        if (init != kNoNode && !side_effect_free(init)) continue;
        if (ident_uses(n(decl).text, method_span()) != 1) continue;
        emit("T3.1", line_extent(n(stmt).span), "", "'" + n(decl).text + "' is never read");
      }
    }
  }

  // ---- T3.3 ---------------------------------------------------------------

  void dead_code() {
    for (const auto& list : statement_lists()) {
      for (std::size_t k = 0; k + 1 < list.size(); ++k) {
        if (!is_jump(n(list[k]).kind)) continue;
        const Span first = line_extent(n(list[k + 1]).span);
        const Span last = line_extent(n(list.back()).span);
        emit("T3.3", {first.begin, last.end}, "", "unreachable after " + std::string(to_string(n(list[k]).kind)));
        break;
      }
    }
    for (NodeId id = 0; id < t_.size(); ++id) {
      if (n(id).kind != NodeKind::If) continue;
      const NodeId cond = strip_parens(kid(id, Role::Condition));
      if (n(cond).kind != NodeKind::Literal || n(cond).text != "false") continue;
      const NodeId else_branch = kid(id, Role::Else);
      if (else_branch != kNoNode) {
        emit("T3.3", n(id).span, src(else_branch), "if (false) keeps only its else branch");
      } else if (in_list(id)) {
        emit("T3.3", line_extent(n(id).span), "", "if (false) never runs");
      }
    }
  }

  // ---- T5.1 ---------------------------------------------------------------

  bool inside_deferred(NodeId use, NodeId stmt) const {
    for (NodeId p = n(use).parent; p != kNoNode; p = n(p).parent) {
      if (t_.is_within(stmt, p)) return false;
      const NodeKind k = n(p).kind;
      if (is_loop(k) || k == NodeKind::Lambda || k == NodeKind::AnonymousBody) return true;
    }
    return false;
  }

  bool has_effects_between(Span gap) const {
    for (NodeId id = 0; id < t_.size(); ++id) {
      const Node& node = n(id);
      if (!gap.contains(node.span)) continue;
      const NodeKind k = node.kind;
      if (k == NodeKind::Call || k == NodeKind::Assign || k == NodeKind::ObjectCreation ||
          k == NodeKind::Postfix || (k == NodeKind::Unary && (node.text == "++" || node.text == "--"))) {
        return true;
      }
    }
    return false;
  }

  void inline_variable() {
    for (const auto& list : statement_lists()) {
      for (const NodeId stmt : list) {
        const NodeId decl = single_declarator(stmt);
        if (decl == kNoNode) continue;
        const NodeId init = kid(decl, Role::Init);
        if (init == kNoNode || !side_effect_free(init)) continue;
        const std::string& var = n(decl).text;
        if (ident_uses(var, method_span()) != 2) continue;
        NodeId use = kNoNode;
        for (NodeId id = 0; id < t_.size(); ++id) {
          if (n(id).kind == NodeKind::Name && n(id).text == var) use = id;
        }
        if (use == kNoNode || n(use).span.begin < n(stmt).span.end) continue;
        if (assigned_anywhere(var) || inside_deferred(use, stmt)) continue;
        bool stable = true;
        for (const std::string& name : names_in(init)) {
          if (assigned_anywhere(name)) stable = false;
          // A later local of that name would capture the inlined reference.
          for (NodeId id = 0; id < t_.size(); ++id) {
            const NodeKind k = n(id).kind;
            if ((k == NodeKind::VarDeclarator || k == NodeKind::Parameter) && n(id).text == name &&
                n(id).span.begin > n(stmt).span.begin) {
              stable = false;
            }
          }
          if (!is_local_name(name) && has_effects_between({n(stmt).span.end, n(use).span.begin})) stable = false;
        }
        if (!stable) continue;
        const Span removed = line_extent(n(stmt).span);
        const Role use_role = n(use).role;
        const bool bare_context = use_role == Role::Argument || use_role == Role::Init ||
                                  use_role == Role::Right || use_role == Role::Value;
        const bool parens = level_of(n(init).kind) == Level::Other ||
                            (level_of(n(init).kind) == Level::Unary && use_role == Role::Target);
        const std::string value = wrap_if(init, parens && !(bare_context && n(n(use).parent).kind != NodeKind::Binary &&
                                                              n(n(use).parent).kind != NodeKind::Unary));
        emit("T5.1", {removed.begin, n(use).span.end},
             u_.source.substr(removed.end, n(use).span.begin - removed.end) + value,
             "'" + var + "' is used once");
      }
    }
  }

  // ---- T7.1 ---------------------------------------------------------------

  NodeId last_type_args(NodeId type) const {
    const auto args = t_.children(type, Role::TypeArg);
    return args.empty() ? kNoNode : args.back();
  }

  void diamond() {
    for (NodeId id = 0; id < t_.size(); ++id) {
      if (n(id).kind != NodeKind::LocalVarDecl) continue;
      const NodeId declared = last_type_args(kid(id, Role::Type));
      if (declared == kNoNode || n(declared).children.empty()) continue;
      for (const NodeId d : t_.children(id, Role::Declarator)) {
        const NodeId init = strip_parens(kid(d, Role::Init));
        if (init == kNoNode || n(init).kind != NodeKind::ObjectCreation) continue;
        if (kid(init, Role::Body) != kNoNode) continue;
        const NodeId created = last_type_args(kid(init, Role::Type));
        if (created == kNoNode || n(created).children.empty()) continue;
        if (!same_tokens(created, declared)) continue;
        emit("T7.1", n(created).span, "<>", "type arguments repeat the declared type");
      }
    }
  }

  // ---- T7.6 ---------------------------------------------------------------

  void try_with_resources() {
    for (const auto& list : statement_lists()) {
      for (std::size_t k = 0; k + 1 < list.size(); ++k) {
        const NodeId decl = single_declarator(list[k]);
        if (decl == kNoNode) continue;
        const NodeId init = kid(decl, Role::Init);
        if (init == kNoNode || n(init).kind == NodeKind::ArrayInit) continue;
        const NodeId tr = list[k + 1];
        if (n(tr).kind != NodeKind::Try) continue;
        if (kid(tr, Role::Resource) != kNoNode || kid(tr, Role::Catch) != kNoNode) continue;
        const NodeId fin = kid(tr, Role::Finally);
        if (fin == kNoNode) continue;
        const NodeId close_stmt = single_statement(kid(fin, Role::Body));
        if (close_stmt == kNoNode || n(close_stmt).kind != NodeKind::ExprStmt) continue;
        const NodeId call = kid(close_stmt, Role::Value);
        if (n(call).kind != NodeKind::Call || n(call).text != "close" || !t_.children(call, Role::Argument).empty()) continue;
        const NodeId target = strip_parens(kid(call, Role::Target));
        const std::string& var = n(decl).text;
        if (target == kNoNode || n(target).kind != NodeKind::Name || n(target).text != var) continue;
        if (assigned_anywhere(var)) continue;
        if (ident_uses(var, {n(tr).span.end, method_span().end}) != 0) continue;
        const NodeId mods = kid(list[k], Role::Modifier);
        std::string head = "try (";
        if (mods != kNoNode) head += src(mods) + " ";
        head += src(kid(list[k], Role::Type)) + " " + var + " = " + render(init) + ") ";
        emit("T7.6", {n(list[k]).span.begin, n(tr).span.end}, head + src(kid(tr, Role::Body)),
             "finally only closes '" + var + "'");
      }
    }
  }

  const MethodUnit& u_;
  const SyntaxTree& t_;
  std::vector<std::size_t> sig_;
  std::vector<Rewrite> out_;
};

std::string splice(const std::string& text, const Rewrite& r) {
  if (r.target.end > text.size() || r.target.begin > r.target.end ||
      text.compare(r.target.begin, r.target.size(), r.expected) != 0) {
    throw StaleRewrite("rewrite " + r.rule + " no longer matches its target span [" +
                       std::to_string(r.target.begin) + ", " + std::to_string(r.target.end) + ")");
  }
  return text.substr(0, r.target.begin) + r.replacement + text.substr(r.target.end);
}

std::vector<Span> lines_to_spans(const std::string& text, const std::vector<int>& lines) {
  std::vector<std::size_t> starts{0};
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') starts.push_back(i + 1);
  }
  std::vector<Span> spans;
  for (const int l : lines) {
    if (l < 1 || l > static_cast<int>(starts.size())) continue;
    const std::size_t b = starts[l - 1];
    const std::size_t e = l < static_cast<int>(starts.size()) ? starts[l] : text.size();
    spans.push_back({b, e});
  }
  return spans;
}

std::vector<Span> map_spans(const std::vector<Span>& spans, const Rewrite& r) {
  const long delta = static_cast<long>(r.replacement.size()) - static_cast<long>(r.target.size());
  std::vector<Span> out;
  for (const Span& m : spans) {
    if (m.end <= r.target.begin) {
      out.push_back(m);
    } else if (m.begin >= r.target.end) {
      out.push_back({static_cast<std::size_t>(static_cast<long>(m.begin) + delta),
                     static_cast<std::size_t>(static_cast<long>(m.end) + delta)});
    } else {
      const std::size_t b = std::min(m.begin, r.target.begin);
      const std::size_t e = m.end >= r.target.end ? static_cast<std::size_t>(static_cast<long>(m.end) + delta)
                                                  : r.target.begin + r.replacement.size();
      out.push_back({b, std::max(b, e)});
    }
  }
  return out;
}

bool touches(const std::vector<Span>& marked, const Span& target) {
  for (const Span& m : marked) {
    if (m.overlaps(target) || (target.size() == 0 && m.begin <= target.begin && target.begin < m.end)) return true;
  }
  return false;
}

}  // namespace

const std::vector<RuleInfo>& rule_table() { return kRules; }

const RuleInfo* find_rule(std::string_view code) {
  for (const RuleInfo& r : kRules) {
    if (r.code == code) return &r;
  }
  return nullptr;
}

std::vector<Rewrite> applicable_rules(const MethodUnit& unit) { return Analysis(unit).all(); }

MethodUnit apply(const MethodUnit& unit, const Rewrite& rewrite) {
  MethodUnit out = parse_method(splice(unit.source, rewrite));
  out.qualified_name = unit.qualified_name;
  if (unit.file_span.size() != unit.source.size()) {
    out.file_span = {unit.file_span.begin, unit.file_span.begin + out.source.size()};
  }
  return out;
}

std::vector<Rewrite> applicable_file_rules(const SourceFile& file, const CatalogOptions& options) {
  std::vector<Rewrite> out;
  const auto inside_import = [&](std::size_t offset) {
    for (const ImportInfo& imp : file.imports) {
      if (imp.span.begin <= offset && offset < imp.span.end) return true;
    }
    return false;
  };
  const auto line_extent = [&](Span s) {
    const std::string& text = file.text;
    std::size_t b = s.begin;
    while (b > 0 && (text[b - 1] == ' ' || text[b - 1] == '\t')) --b;
    std::size_t e = s.end;
    while (e < text.size() && (text[e] == ' ' || text[e] == '\t' || text[e] == '\r')) ++e;
    if ((b == 0 || text[b - 1] == '\n') && (e == text.size() || text[e] == '\n')) {
      return Span{b, e < text.size() ? e + 1 : e};
    }
    return s;
  };
  std::map<std::string, int> used;
  for (const Token& tok : file.tokens) {
    if (tok.kind == TokenKind::Identifier && !inside_import(tok.offset)) ++used[tok.text];
  }
  for (const ImportInfo& imp : file.imports) {
    if (imp.wildcard) continue;
    if (used.count(imp.simple_name())) continue;
    const Span target = line_extent(imp.span);
    out.push_back({"T3.2", target, "", file.text.substr(target.begin, target.size()),
                   "'" + imp.simple_name() + "' never occurs"});
  }

  std::map<std::string, std::vector<const ImportInfo*>> by_package;
  std::set<std::string> wildcards;
  for (const ImportInfo& imp : file.imports) {
    if (imp.is_static) continue;
    if (imp.wildcard) {
      wildcards.insert(imp.package());
    } else {
      by_package[imp.package()].push_back(&imp);
    }
  }
  for (const auto& [pkg, group] : by_package) {
    if (pkg.empty() || wildcards.count(pkg) || static_cast<int>(group.size()) < options.merge_imports_threshold) continue;
    const Span range{group.front()->span.begin, line_extent(group.back()->span).end};
    std::string replacement;
    std::size_t at = range.begin;
    for (std::size_t k = 0; k < group.size(); ++k) {
      const Span cut = k == 0 ? group[k]->span : line_extent(group[k]->span);
      replacement += file.text.substr(at, cut.begin - at);
      if (k == 0) replacement += "import " + pkg + ".*;";
      at = cut.end;
    }
    replacement += file.text.substr(at, range.end - at);
    out.push_back({"T7.4", range, replacement, file.text.substr(range.begin, range.size()),
                   std::to_string(group.size()) + " imports from " + pkg});
  }
  std::sort(out.begin(), out.end(), [](const Rewrite& a, const Rewrite& b) {
    return a.target.begin != b.target.begin ? a.target.begin < b.target.begin : a.rule < b.rule;
  });
  return out;
}

SourceFile apply(const SourceFile& file, const Rewrite& rewrite) {
  return parse_source_file(splice(file.text, rewrite), file.path);
}

bool is_smaller(int sloc, int tokens, int ref_sloc, int ref_tokens) {
  return sloc < ref_sloc || (sloc == ref_sloc && tokens < ref_tokens);
}

bool is_smaller(const MethodUnit& candidate, const MethodUnit& reference) {
  return is_smaller(candidate.sloc, candidate.token_count, reference.sloc, reference.token_count);
}

std::vector<Derivation> enumerate_derivations(const MethodUnit& unit, int budget, const EnumerateOptions& options) {
  struct State {
    MethodUnit unit;
    std::vector<std::string> rules;
    std::vector<Span> marked;
  };
  std::vector<Derivation> out;
  if (budget < 1) return out;
  std::unordered_set<std::string> seen{token_key(unit.source)};
  std::deque<State> queue;
  queue.push_back({unit, {}, options.marked_lines ? lines_to_spans(unit.source, *options.marked_lines) : std::vector<Span>{}});
  while (!queue.empty() && static_cast<int>(out.size()) < budget) {
    State state = std::move(queue.front());
    queue.pop_front();
    for (const Rewrite& r : applicable_rules(state.unit)) {
      if (options.marked_lines && !touches(state.marked, r.target)) continue;
      MethodUnit child;
      try {
        child = apply(state.unit, r);
      } catch (const ParseError&) {
        continue;
      }
      if (!is_smaller(child, state.unit)) continue;
      if (!seen.insert(token_key(child.source)).second) continue;
      std::vector<std::string> rules = state.rules;
      rules.push_back(r.rule);
      out.push_back({child, rules});
      queue.push_back({std::move(child), std::move(rules), options.marked_lines ? map_spans(state.marked, r) : std::vector<Span>{}});
      if (static_cast<int>(out.size()) >= budget) break;
    }
  }
  return out;
}

std::vector<MethodUnit> enumerate_candidates(const MethodUnit& unit, int budget, const EnumerateOptions& options) {
  std::vector<MethodUnit> out;
  for (Derivation& d : enumerate_derivations(unit, budget, options)) out.push_back(std::move(d.unit));
  return out;
}

Classification classify_detailed(const MethodUnit& original, const MethodUnit& simplified) {
  Classification result;
  const std::string goal = token_key(simplified.source);
  if (token_key(original.source) == goal) return result;
  std::set<std::string> rules;

  // One rewrite away: every rule that reaches the goal.
  for (const Rewrite& r : applicable_rules(original)) {
    try {
      if (token_key(apply(original, r).source) == goal) rules.insert(r.rule);
    } catch (const ParseError&) {
    }
  }
  if (rules.empty()) {
    for (const Derivation& d : enumerate_derivations(original, 200)) {
      if (token_key(d.unit.source) == goal) {
        rules.insert(d.rules.begin(), d.rules.end());
        break;
      }
    }
  }
  if (!rules.empty()) {
    result.rules.assign(rules.begin(), rules.end());
    return result;
  }

  // Greedy: take rewrites that move closer to the goal, then explain the rest.
  const std::vector<std::string> goal_tokens = significant_tokens(simplified.source);
  MethodUnit current = original;
  std::size_t distance = edit_distance(significant_tokens(current.source), goal_tokens);
  for (int step = 0; step < 32 && distance > 0; ++step) {
    std::optional<MethodUnit> best;
    std::string best_rule;
    std::size_t best_distance = distance;
    for (const Rewrite& r : applicable_rules(current)) {
      try {
        MethodUnit next = apply(current, r);
        const std::size_t d = edit_distance(significant_tokens(next.source), goal_tokens);
        if (d < best_distance) {
          best_distance = d;
          best = std::move(next);
          best_rule = r.rule;
        }
      } catch (const ParseError&) {
      }
    }
    if (!best) break;
    rules.insert(best_rule);
    current = std::move(*best);
    distance = best_distance;
  }
  for (const DiffHunk& h : diff(current.source, simplified.source)) {
    if (h.significant_deleted() == 0 && h.significant_added() == 0) continue;
    if (h.significant_added() == 0) {
      rules.insert("T3.1");
    } else {
      ++result.unclassified_hunks;
    }
  }
  result.rules.assign(rules.begin(), rules.end());
  return result;
}

std::vector<std::string> classify(const MethodUnit& original, const MethodUnit& simplified) {
  return classify_detailed(original, simplified).rules;
}

}  // namespace simplikit
