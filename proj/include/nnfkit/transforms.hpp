/// @file  transforms.hpp
/// @brief The eight transformations (CD, FO, SFO, ∧C, ∧BC, ∨C, ∨BC, ¬C) per
///        language where the capability matrix grants polytime support, plus
///        smoothing, FBDD smoothing, the d-DNNF or-with-clause construction,
///        and flat-sentence normalization.

#pragma once

#include "gate.hpp"

namespace nnfkit {

struct TransformOptions {
  OracleLimits limits{};
  std::optional<VarOrder> order{};
};

inline NodeRef normalize_flat(NnfStore& s, NodeRef root);

// ---------------------------------------------------------------------------
// Substitution (conditioning without cleanup)

/// Replace each leaf over Vars(gamma) by true/false per polarity; nothing
/// else changes. This is conditioning verbatim.
inline NodeRef condition_raw(NnfStore& s, NodeRef root, const Term& gamma) {
  std::unordered_map<Var, bool> fixed;
  for (const Literal& l : gamma) fixed[l.var] = l.positive;
  std::unordered_map<NodeRef, NodeRef> memo;
  for (NodeRef r : s.reachable(root)) {
    const Node n = s.node(r);
    switch (n.kind) {
      case NodeKind::True:
      case NodeKind::False:
        memo[r] = r;
        break;
      case NodeKind::Lit: {
        auto it = fixed.find(n.lit.var);
        if (it == fixed.end()) memo[r] = r;
        else memo[r] = it->second == n.lit.positive ? s.true_node() : s.false_node();
        break;
      }
      case NodeKind::And:
      case NodeKind::Or: {
        std::vector<NodeRef> kids;
        kids.reserve(n.children.size());
        for (NodeRef c : n.children) kids.push_back(memo[c]);
        memo[r] = s.build(n.kind, std::move(kids));
        break;
      }
    }
  }
  return memo[root];
}

// ---------------------------------------------------------------------------
// Smoothing

/// Make every disjunction mention equal variable sets by conjoining (¬v ∨ v)
/// pads onto deficient disjuncts. Preserves equivalence, decomposability and
/// determinism; adds at most 2·|Vars| edges per or-edge.
inline NodeRef smooth(NnfStore& s, NodeRef root) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto pad = [&](Var v) {
    return s.make_or({s.literal(v, false), s.literal(v, true)});
  };
  for (NodeRef r : s.reachable(root)) {
    const Node n = s.node(r);
    if (n.kind == NodeKind::And) {
      std::vector<NodeRef> kids;
      for (NodeRef c : n.children) kids.push_back(memo[c]);
      memo[r] = s.make_and(std::move(kids));
    } else if (n.kind == NodeKind::Or) {
      const std::vector<Var>& all = s.vars_of(r);
      std::vector<NodeRef> kids;
      for (NodeRef c : n.children) {
        NodeRef mc = memo[c];
        const std::vector<Var>& cv = s.vars_of(c);
        if (cv == all) {
          kids.push_back(mc);
          continue;
        }
        std::vector<NodeRef> conj{mc};
        std::vector<Var> missing;
        std::set_difference(all.begin(), all.end(), cv.begin(), cv.end(),
                            std::back_inserter(missing));
        for (Var v : missing) conj.push_back(pad(v));
        kids.push_back(s.make_and(std::move(conj)));
      }
      memo[r] = s.make_or(std::move(kids));
    } else {
      memo[r] = r;
    }
  }
  return memo[root];
}

/// Smooth a decision DAG while preserving the decision and read-once
/// properties: a deficient branch α gains (Y ∧ α) ∨ (¬Y ∧ α) tests for each
/// missing variable Y. Output is in FBDD ∩ s-NNF.
inline NodeRef smooth_fbdd(NnfStore& s, NodeRef root) {
  {
    auto bad = not_in_language(s, root, Lang::FBDD);
    if (bad)
      throw PreconditionError("smooth_fbdd requires an FBDD sentence (node " +
                              std::to_string(*bad) + ")");
  }
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef r) -> NodeRef {
    if (s.is_const(r)) return r;
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    DecisionView v = *decision_view(s, r);
    NodeRef hi = self(self, v.hi), lo = self(self, v.lo);
    auto wrap = [&](NodeRef branch, const std::vector<Var>& missing) {
      for (std::size_t i = missing.size(); i-- > 0;) {
        Var y = missing[i];
        NodeRef py = s.make_and({s.literal(y, true), branch});
        NodeRef ny = s.make_and({s.literal(y, false), branch});
        branch = s.make_or({py, ny});
      }
      return branch;
    };
    const auto& hv = s.vars_of(hi);
    const auto& lv = s.vars_of(lo);
    std::vector<Var> hi_missing, lo_missing;
    std::set_difference(lv.begin(), lv.end(), hv.begin(), hv.end(),
                        std::back_inserter(hi_missing));
    std::set_difference(hv.begin(), hv.end(), lv.begin(), lv.end(),
                        std::back_inserter(lo_missing));
    hi = wrap(hi, hi_missing);
    lo = wrap(lo, lo_missing);
    NodeRef out = s.make_or({s.make_and({s.literal(v.var, true), hi}),
                             s.make_and({s.literal(v.var, false), lo})});
    memo.emplace(r, out);
    return out;
  };
  return rec(rec, root);
}

// ---------------------------------------------------------------------------
// Conditioning

namespace detail {
inline NodeRef condition_route(NnfStore& s, NodeRef root, const Term& gamma,
                               Lang lang) {
  switch (lang) {
    case Lang::BDD:
    case Lang::FBDD:
    case Lang::OBDD:
    case Lang::OBDD_LT:
      return bdd_restrict(s, root, gamma);
    case Lang::CNF: {
      bool inconsistent = false;
      auto residual = condition_clauses(*clause_view(s, root), gamma, inconsistent);
      if (inconsistent) return s.false_node();
      return clauses_to_sentence(s, std::move(residual));
    }
    case Lang::PI: {
      // PI(Σ|γ) = ⊆-minimal { c \ ¬γ : c ∈ PI(Σ), c ∩ γ = ∅ }, which is
      // ∃Vars(γ).(Σ ∧ γ) computed on the clause set.
      bool inconsistent = false;
      auto residual = condition_clauses(*clause_view(s, root), gamma, inconsistent);
      if (inconsistent) return s.false_node();
      return clauses_to_sentence(s, minimize_under_subsumption(std::move(residual)));
    }
    case Lang::DNF:
    case Lang::MODS: {
      bool valid = false;
      auto residual = condition_terms(*term_view(s, root), gamma, valid);
      if (valid) return s.true_node();
      return terms_to_sentence(s, std::move(residual));
    }
    case Lang::IP: {
      bool valid = false;
      auto residual = condition_terms(*term_view(s, root), gamma, valid);
      if (valid) return s.true_node();
      // keep the logically weakest conditioned terms
      return terms_to_sentence(s, minimize_under_subsumption(std::move(residual)));
    }
    case Lang::S_NNF:
    case Lang::SD_DNNF:
      // substitution only: constant propagation could unbalance disjunct
      // variable sets and break smoothness
      return condition_raw(s, root, gamma);
    default:
      return s.simplify(condition_raw(s, root, gamma));
  }
}
}  // namespace detail

/// Σ | γ for a consistent term γ, staying inside `lang`.
inline NodeRef condition(NnfStore& s, NodeRef root, Term gamma, Lang lang,
                         const TransformOptions& opt = {}) {
  gamma = normalize_lits(std::move(gamma));
  if (!consistent_term(gamma))
    throw PreconditionError("conditioning term is inconsistent");
  require_transform(lang, Transform::CD);
  require_member(s, root, lang, opt.order, opt.limits);
  return detail::condition_route(s, root, gamma, lang);
}

// ---------------------------------------------------------------------------
// Negation

/// Deterministic-preserving negation: child-before-parent construction where
/// the negation of ∧(N_1..N_k) is ∨(∧(N'_i, N_1 ∧ .. ∧ N_{i-1})). Output size
/// is linear in the input.
inline NodeRef negate_deterministic(NnfStore& s, NodeRef root) {
  std::unordered_map<NodeRef, NodeRef> neg;
  for (NodeRef r : s.reachable(root)) {
    const Node n = s.node(r);
    switch (n.kind) {
      case NodeKind::True: neg[r] = s.false_node(); break;
      case NodeKind::False: neg[r] = s.true_node(); break;
      case NodeKind::Lit: neg[r] = s.literal(n.lit.negated()); break;
      case NodeKind::Or: {
        std::vector<NodeRef> kids;
        for (NodeRef c : n.children) kids.push_back(neg[c]);
        neg[r] = s.make_and(std::move(kids));
        break;
      }
      case NodeKind::And: {
        if (n.children.size() == 1) {
          neg[r] = neg[n.children[0]];
          break;
        }
        std::vector<NodeRef> disjuncts;
        NodeRef prefix = 0;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          NodeRef ni = n.children[i];
          if (i == 0) {
            disjuncts.push_back(neg[ni]);
            prefix = ni;
          } else {
            disjuncts.push_back(s.make_and({neg[ni], prefix}));
            if (i + 1 < n.children.size()) prefix = s.make_and({prefix, ni});
          }
        }
        neg[r] = s.make_or(std::move(disjuncts));
        break;
      }
    }
  }
  return neg[root];
}

namespace detail {
inline NodeRef demorgan(NnfStore& s, NodeRef root) {
  std::unordered_map<NodeRef, NodeRef> neg;
  for (NodeRef r : s.reachable(root)) {
    const Node n = s.node(r);
    switch (n.kind) {
      case NodeKind::True: neg[r] = s.false_node(); break;
      case NodeKind::False: neg[r] = s.true_node(); break;
      case NodeKind::Lit: neg[r] = s.literal(n.lit.negated()); break;
      case NodeKind::And:
      case NodeKind::Or: {
        std::vector<NodeRef> kids;
        for (NodeRef c : n.children) kids.push_back(neg[c]);
        neg[r] = s.build(
            n.kind == NodeKind::And ? NodeKind::Or : NodeKind::And,
            std::move(kids));
        break;
      }
    }
  }
  return neg[root];
}
}  // namespace detail

/// ¬Σ staying inside `lang`.
inline NodeRef negate(NnfStore& s, NodeRef root, Lang lang,
                      const TransformOptions& opt = {}) {
  require_transform(lang, Transform::NotC);
  require_member(s, root, lang, opt.order, opt.limits);
  switch (lang) {
    case Lang::BDD:
    case Lang::FBDD:
    case Lang::OBDD:
    case Lang::OBDD_LT:
      return bdd_negate(s, root);
    case Lang::D_NNF:
      return negate_deterministic(s, root);
    case Lang::S_NNF:
      return smooth(s, detail::demorgan(s, root));
    default:  // NNF, f-NNF
      return detail::demorgan(s, root);
  }
}

// ---------------------------------------------------------------------------
// Forgetting

namespace detail {
inline NodeRef forget_route(NnfStore& s, NodeRef root,
                            const std::vector<Var>& xs, Lang lang) {
  std::vector<Var> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) return root;
  auto in_x = [&](Var v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };
  switch (lang) {
    case Lang::DNNF: {
      // replace every leaf over X by true, then propagate constants
      std::unordered_map<NodeRef, NodeRef> memo;
      for (NodeRef r : s.reachable(root)) {
        const Node n = s.node(r);
        if (n.kind == NodeKind::Lit && in_x(n.lit.var)) {
          memo[r] = s.true_node();
        } else if (n.kind == NodeKind::And || n.kind == NodeKind::Or) {
          std::vector<NodeRef> kids;
          for (NodeRef c : n.children) kids.push_back(memo[c]);
          memo[r] = s.build(n.kind, std::move(kids));
        } else {
          memo[r] = r;
        }
      }
      return s.simplify(memo[root]);
    }
    case Lang::DNF:
    case Lang::MODS: {
      auto terms = *term_view(s, root);
      std::vector<Term> out;
      for (Term& t : terms) {
        Term kept;
        for (const Literal& l : t)
          if (!in_x(l.var)) kept.push_back(l);
        if (kept.empty()) return s.true_node();
        out.push_back(std::move(kept));
      }
      return terms_to_sentence(s, std::move(out));
    }
    case Lang::PI: {
      auto clauses = *clause_view(s, root);
      std::vector<Clause> kept;
      for (Clause& c : clauses) {
        bool mentions = false;
        for (const Literal& l : c)
          if (in_x(l.var)) { mentions = true; break; }
        if (!mentions) kept.push_back(std::move(c));
      }
      return clauses_to_sentence(s, std::move(kept));
    }
    default:
      throw CapabilityError("no forgetting route for " +
                            std::string(to_string(lang)));
  }
}
}  // namespace detail

/// ∃X.Σ staying inside `lang`.
inline NodeRef forget(NnfStore& s, NodeRef root, const std::vector<Var>& xs,
                      Lang lang, const TransformOptions& opt = {}) {
  require_transform(lang, Transform::FO);
  require_member(s, root, lang, opt.order, opt.limits);
  return detail::forget_route(s, root, xs, lang);
}

// ---------------------------------------------------------------------------
// Binary and n-ary combinations

namespace detail {
inline std::vector<Clause> or_clause_sets(const std::vector<Clause>& a,
                                          const std::vector<Clause>& b) {
  std::vector<Clause> out;
  for (const Clause& ca : a)
    for (const Clause& cb : b) {
      Clause u = normalize_lits([&] {
        Clause t = ca;
        t.insert(t.end(), cb.begin(), cb.end());
        return t;
      }());
      if (!valid_clause(u)) out.push_back(std::move(u));
    }
  return out;
}

inline std::vector<Term> and_term_sets(const std::vector<Term>& a,
                                       const std::vector<Term>& b) {
  std::vector<Term> out;
  for (const Term& ta : a)
    for (const Term& tb : b) {
      Term u = normalize_lits([&] {
        Term t = ta;
        t.insert(t.end(), tb.begin(), tb.end());
        return t;
      }());
      if (consistent_term(u)) out.push_back(std::move(u));
    }
  return out;
}

inline NodeRef apply_route(NnfStore& s, NodeRef a, NodeRef b, bool conjoin,
                           Lang lang, const TransformOptions& opt) {
  switch (lang) {
    case Lang::NNF:
      return conjoin ? s.make_and({a, b}) : s.make_or({a, b});
    case Lang::D_NNF:
      if (conjoin) return s.make_and({a, b});
      // deterministic disjunction via De Morgan over deterministic negation
      return negate_deterministic(
          s, s.make_and({negate_deterministic(s, a), negate_deterministic(s, b)}));
    case Lang::S_NNF:
      return conjoin ? s.make_and({a, b}) : smooth(s, s.make_or({a, b}));
    case Lang::BDD:
      return bdd_link_sink(s, a, b, conjoin);
    case Lang::OBDD_LT: {
      std::array<NodeRef, 2> roots{a, b};
      VarOrder order = choose_order(s, roots, opt.order);
      return obdd_apply(s, a, b, conjoin, order);
    }
    case Lang::CNF: {
      auto ca = *clause_view(s, a), cb = *clause_view(s, b);
      if (conjoin) {
        ca.insert(ca.end(), cb.begin(), cb.end());
        return clauses_to_sentence(s, std::move(ca));
      }
      return clauses_to_sentence(s, or_clause_sets(ca, cb));
    }
    case Lang::DNF: {
      auto ta = *term_view(s, a), tb = *term_view(s, b);
      if (conjoin) return terms_to_sentence(s, and_term_sets(ta, tb));
      ta.insert(ta.end(), tb.begin(), tb.end());
      return terms_to_sentence(s, std::move(ta));
    }
    case Lang::DNNF:
      // ∨BC only: decomposability is only concerned with and-nodes
      return s.make_or({a, b});
    case Lang::MODS:
      // ∧BC only: term cross product, deduplicated, stays smooth
      return terms_to_sentence(s,
                               and_term_sets(*term_view(s, a), *term_view(s, b)));
    case Lang::PI:
      // ∨BC only: pairwise clause disjunctions, subsumption-minimized
      return clauses_to_sentence(
          s, minimize_under_subsumption(
                 or_clause_sets(*clause_view(s, a), *clause_view(s, b))));
    case Lang::IP:
      // ∧BC only: pairwise term conjunctions, entailment-maximal kept
      return terms_to_sentence(
          s, minimize_under_subsumption(
                 and_term_sets(*term_view(s, a), *term_view(s, b))));
    default:
      throw CapabilityError("no combination route for " +
                            std::string(to_string(lang)));
  }
}
}  // namespace detail

/// Σ ∧ Φ within `lang` (bounded conjunction).
inline NodeRef apply_and(NnfStore& s, NodeRef a, NodeRef b, Lang lang,
                         const TransformOptions& opt = {}) {
  require_transform(lang, Transform::AndBC);
  require_member(s, a, lang, opt.order, opt.limits);
  require_member(s, b, lang, opt.order, opt.limits);
  return detail::apply_route(s, a, b, true, lang, opt);
}

/// Σ ∨ Φ within `lang` (bounded disjunction).
inline NodeRef apply_or(NnfStore& s, NodeRef a, NodeRef b, Lang lang,
                        const TransformOptions& opt = {}) {
  require_transform(lang, Transform::OrBC);
  require_member(s, a, lang, opt.order, opt.limits);
  require_member(s, b, lang, opt.order, opt.limits);
  return detail::apply_route(s, a, b, false, lang, opt);
}

/// ∧ of a finite set of sentences within `lang`.
inline NodeRef conjoin_many(NnfStore& s, std::span<const NodeRef> roots,
                            Lang lang, const TransformOptions& opt = {}) {
  require_transform(lang, Transform::AndC);
  for (NodeRef r : roots) require_member(s, r, lang, opt.order, opt.limits);
  if (roots.empty()) return s.true_node();
  if (roots.size() == 1) return roots[0];
  switch (lang) {
    case Lang::NNF:
    case Lang::D_NNF:
    case Lang::S_NNF:
      return s.make_and(std::vector<NodeRef>(roots.begin(), roots.end()));
    case Lang::BDD: {
      NodeRef acc = roots[0];
      for (std::size_t i = 1; i < roots.size(); ++i)
        acc = bdd_link_sink(s, acc, roots[i], true);
      return acc;
    }
    case Lang::CNF: {
      std::vector<Clause> all;
      for (NodeRef r : roots) {
        auto c = *clause_view(s, r);
        all.insert(all.end(), c.begin(), c.end());
      }
      return clauses_to_sentence(s, std::move(all));
    }
    default:
      throw CapabilityError("no conjunction route for " +
                            std::string(to_string(lang)));
  }
}

/// ∨ of a finite set of sentences within `lang`.
inline NodeRef disjoin_many(NnfStore& s, std::span<const NodeRef> roots,
                            Lang lang, const TransformOptions& opt = {}) {
  require_transform(lang, Transform::OrC);
  for (NodeRef r : roots) require_member(s, r, lang, opt.order, opt.limits);
  if (roots.empty()) return s.false_node();
  if (roots.size() == 1) return roots[0];
  switch (lang) {
    case Lang::NNF:
    case Lang::DNNF:
      return s.make_or(std::vector<NodeRef>(roots.begin(), roots.end()));
    case Lang::D_NNF: {
      std::vector<NodeRef> negs;
      for (NodeRef r : roots) negs.push_back(negate_deterministic(s, r));
      return negate_deterministic(s, s.make_and(std::move(negs)));
    }
    case Lang::S_NNF:
      return smooth(s, s.make_or(std::vector<NodeRef>(roots.begin(), roots.end())));
    case Lang::BDD: {
      NodeRef acc = roots[0];
      for (std::size_t i = 1; i < roots.size(); ++i)
        acc = bdd_link_sink(s, acc, roots[i], false);
      return acc;
    }
    case Lang::DNF: {
      std::vector<Term> all;
      for (NodeRef r : roots) {
        auto t = *term_view(s, r);
        all.insert(all.end(), t.begin(), t.end());
      }
      return terms_to_sentence(s, std::move(all));
    }
    default:
      throw CapabilityError("no disjunction route for " +
                            std::string(to_string(lang)));
  }
}

// ---------------------------------------------------------------------------
// Singleton forgetting

/// ∃x.Σ ≡ (Σ|x) ∨ (Σ|¬x), built with the language's own machinery.
inline NodeRef forget_single(NnfStore& s, NodeRef root, Var x, Lang lang,
                             const TransformOptions& opt = {}) {
  require_transform(lang, Transform::SFO);
  require_member(s, root, lang, opt.order, opt.limits);
  const Term pos{Literal(x, true)}, neg{Literal(x, false)};
  switch (lang) {
    case Lang::DNNF:
    case Lang::DNF:
    case Lang::PI:
    case Lang::MODS:
      return detail::forget_route(s, root, {x}, lang);
    case Lang::NNF:
      return s.make_or({s.simplify(condition_raw(s, root, pos)),
                        s.simplify(condition_raw(s, root, neg))});
    case Lang::D_NNF: {
      NodeRef a = s.simplify(condition_raw(s, root, pos));
      NodeRef b = s.simplify(condition_raw(s, root, neg));
      return detail::apply_route(s, a, b, false, Lang::D_NNF, opt);
    }
    case Lang::S_NNF: {
      NodeRef a = condition_raw(s, root, pos);
      NodeRef b = condition_raw(s, root, neg);
      return smooth(s, s.make_or({a, b}));
    }
    case Lang::F_NNF: {
      // normalize to CNF or DNF first (flat disjunction of two flat
      // cofactors is not flat in general)
      NodeRef nf = normalize_flat(s, root);
      if (auto terms = term_view(s, nf)) {
        std::vector<Term> out;
        for (Term& t : *terms) {
          Term kept;
          for (const Literal& l : t)
            if (l.var != x) kept.push_back(l);
          if (kept.empty()) return s.true_node();
          out.push_back(std::move(kept));
        }
        return terms_to_sentence(s, std::move(out));
      }
      auto clauses = *clause_view(s, nf);
      bool dead_a = false, dead_b = false;
      auto ca = condition_clauses(clauses, pos, dead_a);
      auto cb = condition_clauses(clauses, neg, dead_b);
      if (dead_a) return dead_b ? s.false_node() : clauses_to_sentence(s, cb);
      if (dead_b) return clauses_to_sentence(s, ca);
      return clauses_to_sentence(s, detail::or_clause_sets(ca, cb));
    }
    case Lang::CNF: {
      auto clauses = *clause_view(s, root);
      bool dead_a = false, dead_b = false;
      auto ca = condition_clauses(clauses, pos, dead_a);
      auto cb = condition_clauses(clauses, neg, dead_b);
      if (dead_a) return dead_b ? s.false_node() : clauses_to_sentence(s, cb);
      if (dead_b) return clauses_to_sentence(s, ca);
      return clauses_to_sentence(s, detail::or_clause_sets(ca, cb));
    }
    case Lang::BDD: {
      NodeRef a = bdd_restrict(s, root, pos);
      NodeRef b = bdd_restrict(s, root, neg);
      return bdd_link_sink(s, a, b, false);
    }
    case Lang::OBDD:
    case Lang::OBDD_LT: {
      std::array<NodeRef, 1> roots{root};
      VarOrder order = choose_order(s, roots, opt.order);
      NodeRef a = bdd_restrict(s, root, pos);
      NodeRef b = bdd_restrict(s, root, neg);
      return obdd_apply(s, a, b, false, order);
    }
    default:
      throw CapabilityError("no singleton-forgetting route for " +
                            std::string(to_string(lang)));
  }
}

// ---------------------------------------------------------------------------
// d-DNNF disjunction with one clause

/// Σ ∨ γ for d-DNNF Σ and clause γ, built as ((Σ|α) ∧ α) ∨ β with α = ¬γ
/// and β the decision-list form of γ. Output stays in d-DNNF.
inline NodeRef or_clause_ddnnf(NnfStore& s, NodeRef root, Clause gamma,
                               const TransformOptions& opt = {}) {
  gamma = normalize_lits(std::move(gamma));
  if (valid_clause(gamma)) return s.true_node();
  if (gamma.empty()) return root;
  {
    auto bad = not_in_language(s, root, Lang::D_DNNF, opt.order, opt.limits);
    if (bad)
      throw PreconditionError("or_clause_ddnnf requires a d-DNNF sentence (node " +
                              std::to_string(*bad) + ")");
  }
  Term alpha = negate_lits(gamma);
  NodeRef conditioned =
      s.simplify(condition_raw(s, root, alpha));
  std::vector<NodeRef> alpha_lits;
  for (const Literal& l : alpha) alpha_lits.push_back(s.literal(l));
  NodeRef head = s.make_and({conditioned, alpha_lits.size() == 1
                                              ? alpha_lits[0]
                                              : s.make_and(alpha_lits)});
  std::vector<NodeRef> disjuncts{head};
  NodeRef prefix = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    NodeRef li = s.literal(gamma[i]);
    if (i == 0) {
      disjuncts.push_back(li);
      prefix = s.literal(gamma[i].negated());
    } else {
      disjuncts.push_back(s.make_and({li, prefix}));
      if (i + 1 < gamma.size())
        prefix = s.make_and({prefix, s.literal(gamma[i].negated())});
    }
  }
  return s.make_or(std::move(disjuncts));
}

// ---------------------------------------------------------------------------
// Flat normalization

/// Turn a flat sentence into CNF (and-root), DNF (or-root), or leave a leaf
/// unchanged: valid clauses collapse to true, inconsistent terms to false.
inline NodeRef normalize_flat(NnfStore& s, NodeRef root) {
  if (!is_flat(s, root))
    throw PreconditionError("normalize_flat requires a flat sentence");
  const Node& n = s.node(root);
  auto fix_clause = [&](NodeRef c) -> NodeRef {
    const Node& m = s.node(c);
    if (m.kind != NodeKind::Or) return c;
    std::vector<NodeRef> kept;
    for (NodeRef k : m.children) {
      if (k == s.true_node()) return s.true_node();
      if (k == s.false_node()) continue;
      kept.push_back(k);
    }
    Clause lits;
    for (NodeRef k : kept) lits.push_back(s.node(k).lit);
    if (valid_clause(normalize_lits(lits))) return s.true_node();
    if (kept.empty()) return s.false_node();
    return s.make_or(std::move(kept));
  };
  auto fix_term = [&](NodeRef c) -> NodeRef {
    const Node& m = s.node(c);
    if (m.kind != NodeKind::And) return c;
    std::vector<NodeRef> kept;
    for (NodeRef k : m.children) {
      if (k == s.false_node()) return s.false_node();
      if (k == s.true_node()) continue;
      kept.push_back(k);
    }
    Term lits;
    for (NodeRef k : kept) lits.push_back(s.node(k).lit);
    if (!consistent_term(normalize_lits(lits))) return s.false_node();
    if (kept.empty()) return s.true_node();
    return s.make_and(std::move(kept));
  };
  if (n.kind == NodeKind::And) {
    std::vector<NodeRef> kids;
    for (NodeRef c : n.children) kids.push_back(fix_clause(c));
    return s.make_and(std::move(kids));
  }
  if (n.kind == NodeKind::Or) {
    std::vector<NodeRef> kids;
    for (NodeRef c : n.children) kids.push_back(fix_term(c));
    return s.make_or(std::move(kids));
  }
  return root;
}

}  // namespace nnfkit
