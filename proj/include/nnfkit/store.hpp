/// @file  store.hpp
/// @brief Hash-consed, append-only store of NNF DAG nodes.
///
/// A sentence is a NodeRef into a store. Constructors canonicalize by
/// deduplicating and sorting children; they never flatten nested same-kind
/// nodes and never propagate constants, so classification always sees the
/// structure the caller built. An explicit simplify() pass is available.

#pragma once

#include <cassert>
#include <cstddef>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "types.hpp"

namespace nnfkit {

enum class NodeKind : std::uint8_t { True, False, Lit, And, Or };

struct Node {
  NodeKind kind;
  Literal lit;                    // meaningful iff kind == Lit
  std::vector<NodeRef> children;  // And/Or: sorted, duplicate-free, non-empty
};

class NnfStore {
public:
  /// The variable universe 1..num_vars is declared up front, never inferred.
  explicit NnfStore(Var num_vars) : num_vars_(num_vars) {
    nodes_.push_back(Node{NodeKind::True, {}, {}});
    nodes_.push_back(Node{NodeKind::False, {}, {}});
    vars_.emplace_back();
    vars_.emplace_back();
  }

  Var num_vars() const { return num_vars_; }
  std::size_t node_count() const { return nodes_.size(); }

  NodeRef true_node() const { return 0; }
  NodeRef false_node() const { return 1; }

  const Node& node(NodeRef r) const {
    check_ref(r);
    return nodes_[r];
  }

  NodeKind kind(NodeRef r) const { return node(r).kind; }
  bool is_const(NodeRef r) const { return r <= 1; }

  /// Sorted set of variables labeling leaf descendants (cached eagerly).
  /// Constants mention no variables.
  const std::vector<Var>& vars_of(NodeRef r) const {
    check_ref(r);
    return vars_[r];
  }

  NodeRef literal(Literal l) {
    if (l.var < 1 || l.var > num_vars_)
      throw InvalidRefError("literal variable " + std::to_string(l.var) +
                            " outside declared universe 1.." +
                            std::to_string(num_vars_));
    auto code = l.to_dimacs();
    auto it = lit_table_.find(code);
    if (it != lit_table_.end()) return it->second;
    auto r = static_cast<NodeRef>(nodes_.size());
    nodes_.push_back(Node{NodeKind::Lit, l, {}});
    vars_.push_back({l.var});
    lit_table_.emplace(code, r);
    return r;
  }
  NodeRef literal(Var v, bool positive) { return literal(Literal(v, positive)); }

  /// Canonical constructor for internal nodes. Children are deduplicated and
  /// sorted; an empty conjunction yields true, an empty disjunction false.
  /// Returns the existing id when an identical node is already present.
  NodeRef build(NodeKind k, std::vector<NodeRef> children) {
    if (k != NodeKind::And && k != NodeKind::Or)
      throw PreconditionError("build() takes And or Or");
    for (NodeRef c : children) check_ref(c);
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());
    if (children.empty())
      return k == NodeKind::And ? true_node() : false_node();
    InternalKey key{k, children};
    auto it = node_table_.find(key);
    if (it != node_table_.end()) return it->second;
    auto r = static_cast<NodeRef>(nodes_.size());
    std::vector<Var> vs;
    for (NodeRef c : children) vs = union_vars(vs, vars_[c]);
    nodes_.push_back(Node{k, {}, std::move(children)});
    vars_.push_back(std::move(vs));
    node_table_.emplace(InternalKey{k, nodes_.back().children}, r);
    return r;
  }

  NodeRef make_and(std::vector<NodeRef> children) {
    return build(NodeKind::And, std::move(children));
  }
  NodeRef make_or(std::vector<NodeRef> children) {
    return build(NodeKind::Or, std::move(children));
  }

  // -- Per-sentence structural metrics ------------------------------------

  /// Number of DAG edges reachable from root, each edge counted once.
  std::size_t size(NodeRef root) const {
    std::size_t edges = 0;
    for (NodeRef r : reachable(root)) edges += nodes_[r].children.size();
    return edges;
  }

  /// Maximum number of edges from root to some leaf.
  std::size_t height(NodeRef root) const {
    check_ref(root);
    std::unordered_map<NodeRef, std::size_t> h;
    for (NodeRef r : reachable(root)) {  // ascending ids: children first
      std::size_t best = 0;
      for (NodeRef c : nodes_[r].children) best = std::max(best, h[c] + 1);
      h[r] = best;
    }
    return h[root];
  }

  /// Reachable node ids in ascending order (children precede parents).
  std::vector<NodeRef> reachable(NodeRef root) const {
    check_ref(root);
    std::vector<NodeRef> stack{root};
    std::vector<bool> seen;
    std::vector<NodeRef> out;
    seen.resize(root + 1, false);
    seen[root] = true;
    out.push_back(root);
    while (!stack.empty()) {
      NodeRef r = stack.back();
      stack.pop_back();
      for (NodeRef c : nodes_[r].children)
        if (!seen[c]) {
          seen[c] = true;
          out.push_back(c);
          stack.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Truth value under a total assignment; one bottom-up pass.
  bool evaluate(NodeRef root, const Assignment& a) const {
    std::unordered_map<NodeRef, bool> val;
    for (NodeRef r : reachable(root)) {
      const Node& n = nodes_[r];
      switch (n.kind) {
        case NodeKind::True: val[r] = true; break;
        case NodeKind::False: val[r] = false; break;
        case NodeKind::Lit: val[r] = a.value(n.lit.var) == n.lit.positive; break;
        case NodeKind::And: {
          bool v = true;
          for (NodeRef c : n.children) v = v && val[c];
          val[r] = v;
          break;
        }
        case NodeKind::Or: {
          bool v = false;
          for (NodeRef c : n.children) v = v || val[c];
          val[r] = v;
          break;
        }
      }
    }
    return val[root];
  }

  /// Explicit constant-propagation pass: drop true from conjunctions,
  /// short-circuit false, collapse single-child nodes. Never applied
  /// implicitly by constructors.
  NodeRef simplify(NodeRef root) {
    check_ref(root);
    std::unordered_map<NodeRef, NodeRef> memo;
    for (NodeRef r : reachable(root)) {
      const Node n = nodes_[r];  // copy: building may reallocate
      if (n.kind == NodeKind::And) {
        std::vector<NodeRef> kept;
        bool dead = false;
        for (NodeRef c : n.children) {
          NodeRef s = memo[c];
          if (s == false_node()) { dead = true; break; }
          if (s != true_node()) kept.push_back(s);
        }
        if (dead) memo[r] = false_node();
        else if (kept.empty()) memo[r] = true_node();
        else if (kept.size() == 1) memo[r] = kept[0];
        else memo[r] = make_and(std::move(kept));
      } else if (n.kind == NodeKind::Or) {
        std::vector<NodeRef> kept;
        bool alive = false;
        for (NodeRef c : n.children) {
          NodeRef s = memo[c];
          if (s == true_node()) { alive = true; break; }
          if (s != false_node()) kept.push_back(s);
        }
        if (alive) memo[r] = true_node();
        else if (kept.empty()) memo[r] = false_node();
        else if (kept.size() == 1) memo[r] = kept[0];
        else memo[r] = make_or(std::move(kept));
      } else {
        memo[r] = r;
      }
    }
    return memo[root];
  }

private:
  struct InternalKey {
    NodeKind kind;
    std::vector<NodeRef> children;
    bool operator==(const InternalKey& o) const {
      return kind == o.kind && children == o.children;
    }
  };
  struct InternalKeyHash {
    std::size_t operator()(const InternalKey& k) const {
      std::size_t h = static_cast<std::size_t>(k.kind) * 0x9e3779b97f4a7c15ull;
      for (NodeRef c : k.children)
        h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return h;
    }
  };

  void check_ref(NodeRef r) const {
    if (r >= nodes_.size())
      throw InvalidRefError("node id " + std::to_string(r) +
                            " out of range (store has " +
                            std::to_string(nodes_.size()) + " nodes)");
  }

  Var num_vars_;
  std::vector<Node> nodes_;
  std::vector<std::vector<Var>> vars_;
  std::unordered_map<std::int64_t, NodeRef> lit_table_;
  std::unordered_map<InternalKey, NodeRef, InternalKeyHash> node_table_;
};

/// Build an assignment over `vars` (sorted) from a packed mask.
inline Assignment make_assignment(std::vector<Var> vars, std::uint64_t mask) {
  return Assignment{std::move(vars), mask};
}

}  // namespace nnfkit
