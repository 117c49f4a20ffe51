/// @file  decision.hpp
/// @brief Decision-node views and BDD/OBDD algorithms over the NNF store.
///
/// A decision node is true, false, or an or-node (X ∧ α) ∨ (¬X ∧ β) with
/// decision branches α, β. In the store this is an Or with two And children,
/// each pairing a literal guard with a branch.

#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "store.hpp"

namespace nnfkit {

struct DecisionView {
  Var var;      // dVar(N)
  NodeRef hi;   // branch under var = true
  NodeRef lo;   // branch under var = false
};

namespace detail {
inline std::optional<Literal> sole_literal_guard(const NnfStore& s, NodeRef conj,
                                                 NodeRef& branch_out) {
  const Node& n = s.node(conj);
  if (n.kind != NodeKind::And || n.children.size() != 2) return std::nullopt;
  NodeRef a = n.children[0], b = n.children[1];
  bool a_lit = s.kind(a) == NodeKind::Lit, b_lit = s.kind(b) == NodeKind::Lit;
  if (a_lit == b_lit) return std::nullopt;  // need exactly one literal guard
  branch_out = a_lit ? b : a;
  return s.node(a_lit ? a : b).lit;
}
}  // namespace detail

/// Strict local decision shape per the definition; branch validity is the
/// caller's concern. Constants are decision nodes but carry no view.
inline std::optional<DecisionView> decision_view(const NnfStore& s, NodeRef r) {
  const Node& n = s.node(r);
  if (n.kind != NodeKind::Or || n.children.size() != 2) return std::nullopt;
  NodeRef br0 = 0, br1 = 0;
  auto g0 = detail::sole_literal_guard(s, n.children[0], br0);
  auto g1 = detail::sole_literal_guard(s, n.children[1], br1);
  if (!g0 || !g1) return std::nullopt;
  if (g0->var != g1->var || g0->positive == g1->positive) return std::nullopt;
  if (g0->positive) return DecisionView{g0->var, br0, br1};
  return DecisionView{g0->var, br1, br0};
}

/// Loose guard test used by the determinism shortcut: an or-node with two
/// conjunct children holding complementary literals of the same variable.
/// The conjuncts may have any arity. Returns the guard variable.
inline std::optional<Var> complementary_guard(const NnfStore& s, NodeRef r) {
  const Node& n = s.node(r);
  if (n.kind != NodeKind::Or || n.children.size() != 2) return std::nullopt;
  auto lits_of = [&](NodeRef c) {
    std::vector<Literal> out;
    const Node& m = s.node(c);
    if (m.kind == NodeKind::Lit) out.push_back(m.lit);
    if (m.kind == NodeKind::And)
      for (NodeRef k : m.children)
        if (s.kind(k) == NodeKind::Lit) out.push_back(s.node(k).lit);
    return out;
  };
  std::optional<Var> best;
  for (const Literal& la : lits_of(n.children[0]))
    for (const Literal& lb : lits_of(n.children[1]))
      if (la.var == lb.var && la.positive != lb.positive)
        if (!best || la.var < *best) best = la.var;
  return best;
}

/// Reduced decision-node constructor: elides redundant tests.
inline NodeRef make_decision(NnfStore& s, Var v, NodeRef hi, NodeRef lo) {
  if (hi == lo) return hi;
  NodeRef phi = s.make_and({s.literal(v, true), hi});
  NodeRef plo = s.make_and({s.literal(v, false), lo});
  return s.make_or({phi, plo});
}

namespace detail {
inline DecisionView require_view(const NnfStore& s, NodeRef r) {
  auto v = decision_view(s, r);
  if (!v) throw PreconditionError("node " + std::to_string(r) +
                                  " is not a decision node");
  return *v;
}
}  // namespace detail

/// Restrict: redirect every node testing a variable of gamma to the chosen
/// child. Input must be a decision DAG; output is one too.
inline NodeRef bdd_restrict(NnfStore& s, NodeRef root, const Term& gamma) {
  std::unordered_map<Var, bool> fixed;
  for (const Literal& l : gamma) fixed[l.var] = l.positive;
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef r) -> NodeRef {
    if (s.is_const(r)) return r;
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    DecisionView v = detail::require_view(s, r);
    NodeRef out;
    auto f = fixed.find(v.var);
    if (f != fixed.end()) {
      out = self(self, f->second ? v.hi : v.lo);
    } else {
      out = make_decision(s, v.var, self(self, v.hi), self(self, v.lo));
    }
    memo.emplace(r, out);
    return out;
  };
  return rec(rec, root);
}

/// Negation by switching sink labels; guards and structure are preserved.
inline NodeRef bdd_negate(NnfStore& s, NodeRef root) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef r) -> NodeRef {
    if (r == s.true_node()) return s.false_node();
    if (r == s.false_node()) return s.true_node();
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    DecisionView v = detail::require_view(s, r);
    NodeRef hi = self(self, v.hi), lo = self(self, v.lo);
    NodeRef phi = s.make_and({s.literal(v.var, true), hi});
    NodeRef plo = s.make_and({s.literal(v.var, false), lo});
    NodeRef out = s.make_or({phi, plo});
    memo.emplace(r, out);
    return out;
  };
  return rec(rec, root);
}

/// Sink-link combination: conjunction replaces the 1-sink of a with b,
/// disjunction replaces the 0-sink. Size of the result is the sum of the
/// operand sizes; no reduction is attempted.
inline NodeRef bdd_link_sink(NnfStore& s, NodeRef a, NodeRef b, bool conjoin) {
  NodeRef target = conjoin ? s.true_node() : s.false_node();
  if (a == target) return b;
  if (s.is_const(a)) return a;
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef r) -> NodeRef {
    if (r == target) return b;
    if (s.is_const(r)) return r;
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    DecisionView v = detail::require_view(s, r);
    NodeRef phi = s.make_and({s.literal(v.var, true), self(self, v.hi)});
    NodeRef plo = s.make_and({s.literal(v.var, false), self(self, v.lo)});
    NodeRef out = s.make_or({phi, plo});
    memo.emplace(r, out);
    return out;
  };
  return rec(rec, a);
}

/// Bryant-style apply over two OBDDs sharing `order`. Memoized on id pairs,
/// reduced on the fly; output node count is at most |a|·|b|.
inline NodeRef obdd_apply(NnfStore& s, NodeRef a, NodeRef b, bool conjoin,
                          const VarOrder& order) {
  std::unordered_map<std::uint64_t, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef x, NodeRef y) -> NodeRef {
    if (conjoin) {
      if (x == s.false_node() || y == s.false_node()) return s.false_node();
      if (x == s.true_node()) return y;
      if (y == s.true_node()) return x;
    } else {
      if (x == s.true_node() || y == s.true_node()) return s.true_node();
      if (x == s.false_node()) return y;
      if (y == s.false_node()) return x;
    }
    if (x > y) std::swap(x, y);  // both ops are commutative
    std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | y;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto vx = detail::require_view(s, x), vy = detail::require_view(s, y);
    Var v;
    NodeRef xh = x, xl = x, yh = y, yl = y;
    if (order.position(vx.var) <= order.position(vy.var)) v = vx.var;
    else v = vy.var;
    if (vx.var == v) { xh = vx.hi; xl = vx.lo; }
    if (vy.var == v) { yh = vy.hi; yl = vy.lo; }
    NodeRef out = make_decision(s, v, self(self, xh, yh), self(self, xl, yl));
    memo.emplace(key, out);
    return out;
  };
  return rec(rec, a, b);
}

/// Rebuild a decision DAG as the reduced OBDD for `order`. Linear-ish when
/// the input already respects the order; Shannon expansion otherwise.
inline NodeRef obdd_rebuild(NnfStore& s, NodeRef root, const VarOrder& order) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef r) -> NodeRef {
    if (s.is_const(r)) return r;
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    Var v = 0;
    std::size_t best = static_cast<std::size_t>(-1);
    for (Var u : s.vars_of(r)) {
      std::size_t p = order.position(u);
      if (p < best) { best = p; v = u; }
    }
    NodeRef hi = self(self, bdd_restrict(s, r, {Literal(v, true)}));
    NodeRef lo = self(self, bdd_restrict(s, r, {Literal(v, false)}));
    NodeRef out = make_decision(s, v, hi, lo);
    memo.emplace(r, out);
    return out;
  };
  return rec(rec, root);
}

/// OBDD for a single clause along `order`: a chain of at most |clause| tests.
inline NodeRef clause_to_obdd(NnfStore& s, const Clause& clause,
                              const VarOrder& order) {
  std::unordered_map<Var, std::pair<bool, bool>> occ;  // var -> (pos, neg)
  for (const Literal& l : clause) {
    auto& p = occ[l.var];
    (l.positive ? p.first : p.second) = true;
  }
  NodeRef acc = s.false_node();
  for (std::size_t i = order.size(); i-- > 0;) {
    auto it = occ.find(order.at(i));
    if (it == occ.end()) continue;
    NodeRef hi = it->second.first ? s.true_node() : acc;
    NodeRef lo = it->second.second ? s.true_node() : acc;
    acc = make_decision(s, it->first, hi, lo);
  }
  return acc;
}

/// OBDD for a single term along `order`.
inline NodeRef term_to_obdd(NnfStore& s, const Term& term, const VarOrder& order) {
  std::unordered_map<Var, std::pair<bool, bool>> occ;
  for (const Literal& l : term) {
    auto& p = occ[l.var];
    (l.positive ? p.first : p.second) = true;
  }
  NodeRef acc = s.true_node();
  for (std::size_t i = order.size(); i-- > 0;) {
    auto it = occ.find(order.at(i));
    if (it == occ.end()) continue;
    NodeRef hi = it->second.second ? s.false_node() : acc;
    NodeRef lo = it->second.first ? s.false_node() : acc;
    acc = make_decision(s, it->first, hi, lo);
  }
  return acc;
}

/// Decision-diagram node count: decision or-nodes plus reachable sinks.
inline std::size_t bdd_node_count(const NnfStore& s, NodeRef root) {
  std::unordered_set<NodeRef> seen;
  std::size_t sinks = 0;
  bool saw_true = false, saw_false = false;
  auto rec = [&](auto&& self, NodeRef r) -> void {
    if (r == s.true_node()) { saw_true = true; return; }
    if (r == s.false_node()) { saw_false = true; return; }
    if (!seen.insert(r).second) return;
    DecisionView v = detail::require_view(s, r);
    self(self, v.hi);
    self(self, v.lo);
  };
  rec(rec, root);
  sinks = (saw_true ? 1 : 0) + (saw_false ? 1 : 0);
  return seen.size() + sinks;
}

/// dVar precedence pairs (parent variable before child variable) observed in
/// the decision DAG, one edge per decision parent/child link.
inline std::vector<std::pair<Var, Var>> decision_constraints(const NnfStore& s,
                                                             NodeRef root) {
  std::vector<std::pair<Var, Var>> edges;
  std::unordered_set<NodeRef> seen;
  auto rec = [&](auto&& self, NodeRef r) -> void {
    if (s.is_const(r)) return;
    if (!seen.insert(r).second) return;
    auto v = decision_view(s, r);
    if (!v) return;
    for (NodeRef br : {v->hi, v->lo}) {
      auto c = decision_view(s, br);
      if (c) edges.emplace_back(v->var, c->var);
      self(self, br);
    }
  };
  rec(rec, root);
  return edges;
}

/// Lexicographically-least total order over 1..n consistent with the given
/// precedence pairs, or nothing when they are cyclic.
inline std::optional<VarOrder> least_consistent_order(
    Var n, const std::vector<std::pair<Var, Var>>& constraints) {
  std::vector<std::vector<Var>> succ(n + 1);
  std::vector<unsigned> indeg(n + 1, 0);
  std::vector<std::unordered_set<Var>> have(n + 1);
  for (auto [a, b] : constraints) {
    if (a == b) return std::nullopt;
    if (a < 1 || a > n || b < 1 || b > n)
      throw InvalidRefError("ordering constraint outside universe");
    if (have[a].insert(b).second) {
      succ[a].push_back(b);
      ++indeg[b];
    }
  }
  std::priority_queue<Var, std::vector<Var>, std::greater<>> ready;
  for (Var v = 1; v <= n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<Var> perm;
  perm.reserve(n);
  while (!ready.empty()) {
    Var v = ready.top();
    ready.pop();
    perm.push_back(v);
    for (Var w : succ[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (perm.size() != n) return std::nullopt;
  return VarOrder(std::move(perm));
}

}  // namespace nnfkit
