#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplikit/lexer.hpp"

namespace simplikit {

/// Half-open byte range [begin, end) into a source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool contains(const Span& other) const noexcept {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const Span& other) const noexcept {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class NodeKind : std::uint8_t {
  // declarations
  MethodDecl,
  Modifiers,
  Annotation,
  TypeParams,
  Parameter,
  Type,
  TypeArgs,
  ImportDecl,
  // statements
  Block,
  LocalVarDecl,
  VarDeclarator,
  ExprStmt,
  If,
  For,
  ForEach,
  While,
  Do,
  Switch,
  SwitchGroup,
  CaseLabel,
  Try,
  Resource,
  CatchClause,
  Finally,
  Return,
  Throw,
  Break,
  Continue,
  Labeled,
  Empty,
  Synchronized,
  Assert,
  // expressions
  Assign,
  Binary,
  Unary,
  Postfix,
  Ternary,
  InstanceOf,
  Cast,
  Call,
  FieldAccess,
  ArrayAccess,
  ObjectCreation,
  ArrayCreation,
  ArrayInit,
  AnonymousBody,
  Lambda,
  MethodRef,
  Literal,
  Name,
  This,
  Super,
  ClassLit,
  Paren,
};

std::string_view to_string(NodeKind kind);

/// Position of a node relative to its parent.
enum class Role : std::uint8_t {
  None,
  Modifier,
  TypeParam,
  ResultType,
  Param,
  Throws,
  Body,
  Type,
  Declarator,
  Init,
  Condition,
  Update,
  Then,
  Else,
  Iterable,
  Selector,
  Label,
  Resource,
  Catch,
  Finally,
  Value,
  Left,
  Right,
  Operand,
  Target,
  TypeArg,
  Argument,
  Dim,
};

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

struct Node {
  NodeKind kind{};
  Role role = Role::None;
  Span span;
  /// Kind-specific payload: operator for Binary/Unary/Assign/Postfix, name for
  /// Name/Call/FieldAccess/MethodDecl/VarDeclarator/Parameter/Labeled/Break/
  /// Continue, literal text for Literal, compact text for Type, "case" or
  /// "default" for CaseLabel, "->" or ":" for SwitchGroup.
  std::string text;
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
};

/// Immutable tree over one source text. Every node's span lies inside its
/// parent's, and sibling spans are disjoint and ordered.
class SyntaxTree {
 public:
  SyntaxTree() = default;
  explicit SyntaxTree(std::vector<Node> nodes, NodeId root)
      : nodes_(std::move(nodes)), root_(root) {}

  NodeId root() const noexcept { return root_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Node& operator[](NodeId id) const { return nodes_.at(id); }
  std::span<const Node> nodes() const noexcept { return nodes_; }

  /// First child with the given role, or kNoNode.
  NodeId child(NodeId id, Role role) const;
  std::vector<NodeId> children(NodeId id, Role role) const;

  /// Pre-order walk of the subtree rooted at `id` (inclusive).
  void visit(NodeId id, const std::function<void(NodeId)>& fn) const;
  std::vector<NodeId> descendants(NodeId id, NodeKind kind) const;

  /// True when `ancestor` is `id` or one of its ancestors.
  bool is_within(NodeId id, NodeId ancestor) const;

 private:
  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
};

/// A parsed Java method: the unit of simplification.
struct MethodUnit {
  std::string qualified_name;
  std::string source;
  std::vector<Token> tokens;
  std::shared_ptr<const SyntaxTree> tree;
  /// Location of `source` inside its enclosing file, when known.
  Span file_span;
  int sloc = 0;
  int token_count = 0;

  std::string_view text(const Span& s) const { return std::string_view(source).substr(s.begin, s.size()); }
  std::string_view text(NodeId id) const { return text((*tree)[id].span); }
  const Node& node(NodeId id) const { return (*tree)[id]; }
  /// The method body block, or kNoNode for abstract methods.
  NodeId body() const;
  /// Declared name of the method.
  const std::string& name() const { return (*tree)[tree->root()].text; }
  bool returns_void() const;
};

/// Parses one method declaration (annotations, modifiers, signature, body).
/// Throws SyntaxError or UnsupportedConstruct.
MethodUnit parse_method(std::string_view text);

/// Source text of the unit, unchanged outside rewritten spans.
std::string print(const MethodUnit& unit);

/// Re-renders the unit in the canonical style: statements on their own lines,
/// four-space indentation, one space around binary operators.
std::string print_canonical(const MethodUnit& unit);

/// Canonical rendering of one expression node.
std::string render_expression(const MethodUnit& unit, NodeId expr);

}  // namespace simplikit
