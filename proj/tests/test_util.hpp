// Shared helpers for the test suites: seeded random sentence generators and
// independent reference implementations used as cross-checks.

#pragma once

#include <random>

#include <nnfkit/nnfkit.hpp>

namespace testutil {
using namespace nnfkit;

/// Random DAG sentence over 1..num_vars with at most max_edges edges.
inline NodeRef random_dag(NnfStore& s, std::mt19937& rng, unsigned num_vars,
                          unsigned max_edges) {
  std::vector<NodeRef> pool;
  pool.push_back(s.true_node());
  pool.push_back(s.false_node());
  for (Var v = 1; v <= num_vars; ++v) {
    pool.push_back(s.literal(v, true));
    pool.push_back(s.literal(v, false));
  }
  std::uniform_int_distribution<unsigned> arity(2, 4);
  std::uniform_int_distribution<unsigned> coin(0, 1);
  unsigned edges = 0;
  NodeRef last = pool[2 + (rng() % (2 * num_vars))];
  while (edges < max_edges) {
    unsigned k = arity(rng);
    if (edges + k > max_edges) break;
    std::vector<NodeRef> kids;
    for (unsigned i = 0; i < k; ++i)
      kids.push_back(pool[rng() % pool.size()]);
    last = s.build(coin(rng) ? NodeKind::And : NodeKind::Or, std::move(kids));
    pool.push_back(last);
    edges += k;
  }
  return last;
}

/// Random tree sentence, safe for memoless recursive reference evaluation.
inline NodeRef random_tree(NnfStore& s, std::mt19937& rng, unsigned num_vars,
                           unsigned depth) {
  std::uniform_int_distribution<unsigned> pct(0, 99);
  if (depth == 0 || pct(rng) < 25) {
    unsigned roll = pct(rng);
    if (roll < 4) return s.true_node();
    if (roll < 8) return s.false_node();
    Var v = 1 + rng() % num_vars;
    return s.literal(v, rng() % 2 == 0);
  }
  std::uniform_int_distribution<unsigned> arity(2, 3);
  unsigned k = arity(rng);
  std::vector<NodeRef> kids;
  for (unsigned i = 0; i < k; ++i)
    kids.push_back(random_tree(s, rng, num_vars, depth - 1));
  return s.build(pct(rng) < 50 ? NodeKind::And : NodeKind::Or, std::move(kids));
}

inline Clause random_clause(std::mt19937& rng, unsigned num_vars,
                            unsigned max_len) {
  std::uniform_int_distribution<unsigned> len(1, max_len);
  Clause c;
  unsigned k = len(rng);
  for (unsigned i = 0; i < k; ++i)
    c.push_back(Literal(1 + rng() % num_vars, rng() % 2 == 0));
  return normalize_lits(std::move(c));
}

/// Random consistent term over distinct variables.
inline Term random_term(std::mt19937& rng, unsigned num_vars, unsigned max_len) {
  std::uniform_int_distribution<unsigned> len(1, max_len);
  std::vector<Var> vars(num_vars);
  for (unsigned i = 0; i < num_vars; ++i) vars[i] = i + 1;
  std::shuffle(vars.begin(), vars.end(), rng);
  unsigned k = std::min<unsigned>(len(rng), num_vars);
  Term t;
  for (unsigned i = 0; i < k; ++i)
    t.push_back(Literal(vars[i], rng() % 2 == 0));
  return normalize_lits(std::move(t));
}

inline CnfFormula random_3cnf(std::mt19937& rng, unsigned num_vars,
                              unsigned num_clauses) {
  CnfFormula f;
  f.num_vars = num_vars;
  for (unsigned i = 0; i < num_clauses; ++i) {
    std::vector<Var> vars(num_vars);
    for (unsigned v = 0; v < num_vars; ++v) vars[v] = v + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    Clause c;
    for (unsigned j = 0; j < 3 && j < num_vars; ++j)
      c.push_back(Literal(vars[j], rng() % 2 == 0));
    f.clauses.push_back(normalize_lits(std::move(c)));
    f.tautological.push_back(false);
  }
  return f;
}

/// Memoless recursive evaluation; exponential on shared DAGs, use on trees.
inline bool eval_nocache(const NnfStore& s, NodeRef r, const Assignment& a) {
  const Node& n = s.node(r);
  switch (n.kind) {
    case NodeKind::True: return true;
    case NodeKind::False: return false;
    case NodeKind::Lit: return a.value(n.lit.var) == n.lit.positive;
    case NodeKind::And:
      for (NodeRef c : n.children)
        if (!eval_nocache(s, c, a)) return false;
      return true;
    case NodeKind::Or:
      for (NodeRef c : n.children)
        if (eval_nocache(s, c, a)) return true;
      return false;
  }
  return false;
}

/// Edge count by BFS over an explicit visited set.
inline std::size_t count_edges_independent(const NnfStore& s, NodeRef root) {
  std::vector<NodeRef> queue{root};
  std::set<NodeRef> seen{root};
  std::size_t edges = 0;
  while (!queue.empty()) {
    NodeRef r = queue.back();
    queue.pop_back();
    for (NodeRef c : s.node(r).children) {
      ++edges;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return edges;
}

/// Height by top-down memoized depth-first search.
inline std::size_t height_independent(const NnfStore& s, NodeRef root) {
  std::map<NodeRef, std::size_t> memo;
  auto rec = [&](auto&& self, NodeRef r) -> std::size_t {
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    std::size_t best = 0;
    for (NodeRef c : s.node(r).children)
      best = std::max(best, 1 + self(self, c));
    memo.emplace(r, best);
    return best;
  };
  return rec(rec, root);
}

/// All variables 1..n.
inline std::vector<Var> universe(Var n) {
  std::vector<Var> out;
  for (Var v = 1; v <= n; ++v) out.push_back(v);
  return out;
}

}  // namespace testutil
