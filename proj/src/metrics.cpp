#include "simplikit/metrics.hpp"

#include <vector>

namespace simplikit {

namespace {

bool is_logical(const Node& n) {
  return n.kind == NodeKind::Binary && (n.text == "&&" || n.text == "||");
}

class Cognitive {
 public:
  explicit Cognitive(const SyntaxTree& t) : t_(t) {}

  int run(NodeId root) {
    walk(root, 0);
    return score_;
  }

 private:
  // Children of `id`, with the ones in `nested_roles` visited one level deeper.
  void walk_children(NodeId id, int nesting, std::initializer_list<Role> nested_roles) {
    for (const NodeId c : t_[id].children) {
      bool deeper = false;
      for (const Role r : nested_roles) deeper = deeper || t_[c].role == r;
      walk(c, deeper ? nesting + 1 : nesting);
    }
  }

  void walk_if(NodeId id, int nesting, bool else_if) {
    score_ += else_if ? 1 : 1 + nesting;
    // The chain shares the nesting level of its head.
    const int level = else_if ? nesting - 1 : nesting;
    for (const NodeId c : t_[id].children) {
      const Node& child = t_[c];
      if (child.role == Role::Else) {
        if (child.kind == NodeKind::If) {
          walk_if(c, level + 1, true);
        } else {
          score_ += 1;
          walk(c, level + 1);
        }
      } else if (child.role == Role::Then) {
        walk(c, level + 1);
      } else {
        walk(c, level);
      }
    }
  }

  // Operators of a maximal &&/|| tree in source order, looking through parens.
  void logical_sequence(NodeId id, std::vector<std::string>& ops) {
    const Node& n = t_[id];
    if (n.kind == NodeKind::Paren) {
      const NodeId inner = t_.child(id, Role::Value);
      if (inner != kNoNode && is_logical(t_[inner])) {
        logical_sequence(inner, ops);
        return;
      }
    }
    if (!is_logical(n)) {
      walk(id, depth_);
      return;
    }
    logical_sequence(t_.child(id, Role::Left), ops);
    ops.push_back(n.text);
    logical_sequence(t_.child(id, Role::Right), ops);
  }

  void walk(NodeId id, int nesting) {
    const Node& n = t_[id];
    switch (n.kind) {
      case NodeKind::If:
        walk_if(id, nesting, false);
        return;
      case NodeKind::For:
      case NodeKind::ForEach:
      case NodeKind::While:
      case NodeKind::Do:
        score_ += 1 + nesting;
        walk_children(id, nesting, {Role::Body});
        return;
      case NodeKind::Switch:
        score_ += 1 + nesting;
        walk_children(id, nesting, {Role::Body});
        return;
      case NodeKind::CatchClause:
        score_ += 1 + nesting;
        walk_children(id, nesting, {Role::Body});
        return;
      case NodeKind::Ternary:
        score_ += 1 + nesting;
        walk_children(id, nesting, {Role::Then, Role::Else});
        return;
      case NodeKind::Lambda:
        walk_children(id, nesting, {Role::Body});
        return;
      case NodeKind::Break:
      case NodeKind::Continue:
        if (!n.text.empty()) score_ += 1;
        return;
      case NodeKind::Binary:
        if (is_logical(n)) {
          std::vector<std::string> ops;
          const int saved = depth_;
          depth_ = nesting;
          logical_sequence(id, ops);
          depth_ = saved;
          for (std::size_t i = 0; i < ops.size(); ++i) {
            if (i == 0 || ops[i] != ops[i - 1]) score_ += 1;
          }
          return;
        }
        break;
      default:
        break;
    }
    walk_children(id, nesting, {});
  }

  const SyntaxTree& t_;
  int score_ = 0;
  int depth_ = 0;
};

}  // namespace

int cyclomatic(const MethodUnit& unit) {
  const SyntaxTree& t = *unit.tree;
  int points = 0;
  t.visit(t.root(), [&](NodeId id) {
    const Node& n = t[id];
    switch (n.kind) {
      case NodeKind::If:
      case NodeKind::For:
      case NodeKind::ForEach:
      case NodeKind::While:
      case NodeKind::Do:
      case NodeKind::CatchClause:
      case NodeKind::Ternary:
        ++points;
        break;
      case NodeKind::CaseLabel:
        points += static_cast<int>(t.children(id, Role::Value).size());
        break;
      case NodeKind::Binary:
        if (is_logical(n)) ++points;
        break;
      default:
        break;
    }
  });
  return 1 + points;
}

int cognitive(const MethodUnit& unit) {
  return Cognitive(*unit.tree).run(unit.tree->root());
}

std::optional<double> MetricPair::reduction() const {
  if (before <= 0) return std::nullopt;
  return static_cast<double>(before - after) / static_cast<double>(before);
}

MetricsDelta quality_delta(const MethodUnit& original, const MethodUnit& simplified) {
  MetricsDelta d;
  d.sloc = {original.sloc, simplified.sloc};
  d.tokens = {original.token_count, simplified.token_count};
  d.cyclomatic = {cyclomatic(original), cyclomatic(simplified)};
  d.cognitive = {cognitive(original), cognitive(simplified)};
  return d;
}

}  // namespace simplikit
