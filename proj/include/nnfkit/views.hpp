/// @file  views.hpp
/// @brief Flat clause-set / term-set views of sentences.
///
/// The view routines accept classical CNF/DNF shapes, including clauses with
/// complementary literals (tautological clauses survive DIMACS parsing and
/// conditioning introduces constants). The strict Table-2 style predicates
/// used for classification live in properties.hpp.

#pragma once

#include <optional>

#include "store.hpp"

namespace nnfkit {

/// One node as a term: true -> empty term, a literal, or a conjunction of
/// literal leaves. Returns nothing for anything else (including false).
inline std::optional<Term> node_term_view(const NnfStore& s, NodeRef r) {
  const Node& n = s.node(r);
  switch (n.kind) {
    case NodeKind::True: return Term{};
    case NodeKind::Lit: return Term{n.lit};
    case NodeKind::And: {
      Term t;
      for (NodeRef c : n.children) {
        if (s.kind(c) != NodeKind::Lit) return std::nullopt;
        t.push_back(s.node(c).lit);
      }
      return normalize_lits(std::move(t));
    }
    default: return std::nullopt;
  }
}

/// One node as a clause: false -> empty clause, a literal, or a disjunction
/// of literal leaves.
inline std::optional<Clause> node_clause_view(const NnfStore& s, NodeRef r) {
  const Node& n = s.node(r);
  switch (n.kind) {
    case NodeKind::False: return Clause{};
    case NodeKind::Lit: return Clause{n.lit};
    case NodeKind::Or: {
      Clause c;
      for (NodeRef k : n.children) {
        if (s.kind(k) != NodeKind::Lit) return std::nullopt;
        c.push_back(s.node(k).lit);
      }
      return normalize_lits(std::move(c));
    }
    default: return std::nullopt;
  }
}

/// The sentence as a conjunctively interpreted clause set. True children of
/// the root conjunction are dropped. Returns nothing when the sentence is
/// not in (classical) CNF shape.
inline std::optional<std::vector<Clause>> clause_view(const NnfStore& s,
                                                      NodeRef root) {
  const Node& n = s.node(root);
  if (n.kind == NodeKind::True) return std::vector<Clause>{};
  if (n.kind == NodeKind::And) {
    std::vector<Clause> out;
    for (NodeRef c : n.children) {
      if (s.kind(c) == NodeKind::True) continue;
      auto cl = node_clause_view(s, c);
      if (!cl) return std::nullopt;
      out.push_back(std::move(*cl));
    }
    return out;
  }
  auto cl = node_clause_view(s, root);
  if (!cl) return std::nullopt;
  return std::vector<Clause>{std::move(*cl)};
}

/// The sentence as a disjunctively interpreted term set. False children of
/// the root disjunction are dropped.
inline std::optional<std::vector<Term>> term_view(const NnfStore& s,
                                                  NodeRef root) {
  const Node& n = s.node(root);
  if (n.kind == NodeKind::False) return std::vector<Term>{};
  if (n.kind == NodeKind::Or) {
    std::vector<Term> out;
    for (NodeRef c : n.children) {
      if (s.kind(c) == NodeKind::False) continue;
      auto t = node_term_view(s, c);
      if (!t) return std::nullopt;
      out.push_back(std::move(*t));
    }
    return out;
  }
  auto t = node_term_view(s, root);
  if (!t) return std::nullopt;
  return std::vector<Term>{std::move(*t)};
}

/// Canonical CNF sentence for a clause set: clauses sorted and deduplicated;
/// no clauses -> true, a single clause stays bare, the empty clause -> false.
inline NodeRef clauses_to_sentence(NnfStore& s, std::vector<Clause> clauses) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  std::vector<NodeRef> nodes;
  nodes.reserve(clauses.size());
  for (const Clause& c : clauses) {
    if (c.empty()) return s.false_node();  // empty clause annihilates
    if (c.size() == 1) {
      nodes.push_back(s.literal(c[0]));
    } else {
      std::vector<NodeRef> lits;
      for (const Literal& l : c) lits.push_back(s.literal(l));
      nodes.push_back(s.make_or(std::move(lits)));
    }
  }
  if (nodes.empty()) return s.true_node();
  if (nodes.size() == 1) return nodes[0];
  return s.make_and(std::move(nodes));
}

/// Canonical DNF sentence for a term set, dual to clauses_to_sentence.
inline NodeRef terms_to_sentence(NnfStore& s, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  std::vector<NodeRef> nodes;
  nodes.reserve(terms.size());
  for (const Term& t : terms) {
    if (t.empty()) return s.true_node();  // empty term dominates
    if (t.size() == 1) {
      nodes.push_back(s.literal(t[0]));
    } else {
      std::vector<NodeRef> lits;
      for (const Literal& l : t) lits.push_back(s.literal(l));
      nodes.push_back(s.make_and(std::move(lits)));
    }
  }
  if (nodes.empty()) return s.false_node();
  if (nodes.size() == 1) return nodes[0];
  return s.make_or(std::move(nodes));
}

/// Condition a clause set on a consistent term: satisfied clauses are
/// dropped, falsified literals removed; an empty residual clause makes the
/// whole set inconsistent.
inline std::vector<Clause> condition_clauses(const std::vector<Clause>& clauses,
                                             const Term& gamma,
                                             bool& inconsistent) {
  inconsistent = false;
  std::vector<Clause> out;
  for (const Clause& c : clauses) {
    Clause residual;
    bool satisfied = false;
    for (const Literal& l : c) {
      auto it = std::lower_bound(gamma.begin(), gamma.end(), Literal(l.var, false));
      bool assigned = false, value = false;
      if (it != gamma.end() && it->var == l.var) { assigned = true; value = it->positive; }
      if (assigned) {
        if (value == l.positive) { satisfied = true; break; }
        // falsified literal: drop from the clause
      } else {
        residual.push_back(l);
      }
    }
    if (satisfied) continue;
    if (residual.empty()) { inconsistent = true; return {Clause{}}; }
    out.push_back(std::move(residual));
  }
  return out;
}

/// Condition a term set on a consistent term: falsified terms are dropped,
/// satisfied literals removed; an empty residual term makes the set valid.
inline std::vector<Term> condition_terms(const std::vector<Term>& terms,
                                         const Term& gamma, bool& valid) {
  valid = false;
  std::vector<Term> out;
  for (const Term& t : terms) {
    Term residual;
    bool dead = false;
    for (const Literal& l : t) {
      auto it = std::lower_bound(gamma.begin(), gamma.end(), Literal(l.var, false));
      bool assigned = false, value = false;
      if (it != gamma.end() && it->var == l.var) { assigned = true; value = it->positive; }
      if (assigned) {
        if (value != l.positive) { dead = true; break; }
      } else {
        residual.push_back(l);
      }
    }
    if (dead) continue;
    if (residual.empty()) { valid = true; return {Term{}}; }
    out.push_back(std::move(residual));
  }
  return out;
}

/// Keep only ⊆-minimal literal sets (drop supersets), canonical order.
inline std::vector<LitSet> minimize_under_subsumption(std::vector<LitSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const LitSet& a, const LitSet& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<LitSet> kept;
  for (const LitSet& s : sets) {
    bool covered = false;
    for (const LitSet& k : kept)
      if (lits_subset(k, s)) { covered = true; break; }
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace nnfkit
