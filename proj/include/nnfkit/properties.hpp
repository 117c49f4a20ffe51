/// @file  properties.hpp
/// @brief Structural and semantic checkers for the language properties
///        (decomposability, determinism, smoothness, flatness, simple
///        disjunction/conjunction, decision, ordering) and the classifier
///        mapping a sentence to its language set.

#pragma once

#include "decision.hpp"
#include "lang.hpp"
#include "oracle.hpp"
#include "views.hpp"

namespace nnfkit {

enum class Tri : unsigned { yes, no, unknown };

inline std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

struct PropertyResult {
  Tri value = Tri::yes;
  std::optional<NodeRef> witness;

  bool is_yes() const { return value == Tri::yes; }
  bool is_no() const { return value == Tri::no; }
};

inline PropertyResult property_yes() { return {Tri::yes, std::nullopt}; }
inline PropertyResult property_no(NodeRef w) { return {Tri::no, w}; }

// ---------------------------------------------------------------------------
// Structural properties

/// Conjuncts of every and-node share no variables. Witness: the lowest-id
/// violating and-node. Pairwise disjointness of sorted var sets is checked
/// as |union| = Σ|child vars|.
inline PropertyResult is_decomposable(const NnfStore& s, NodeRef root) {
  for (NodeRef r : s.reachable(root)) {
    const Node& n = s.node(r);
    if (n.kind != NodeKind::And) continue;
    std::size_t sum = 0;
    for (NodeRef c : n.children) sum += s.vars_of(c).size();
    if (s.vars_of(r).size() != sum) return property_no(r);
  }
  return property_yes();
}

/// Disjuncts of every or-node mention the same variables.
inline PropertyResult is_smooth(const NnfStore& s, NodeRef root) {
  for (NodeRef r : s.reachable(root)) {
    const Node& n = s.node(r);
    if (n.kind != NodeKind::Or) continue;
    for (std::size_t i = 1; i < n.children.size(); ++i)
      if (s.vars_of(n.children[i]) != s.vars_of(n.children[0]))
        return property_no(r);
  }
  return property_yes();
}

/// Disjuncts of every or-node are pairwise logically contradictory.
/// Decision-shaped or-nodes are accepted structurally (complementary
/// guards); disjoint simple-term disjunctions likewise; everything else is
/// decided by the oracle within its cap, otherwise reported unknown.
inline PropertyResult is_deterministic(const NnfStore& s, NodeRef root,
                                       const OracleLimits& lim = {}) {
  bool saw_unknown = false;
  NodeRef unknown_at = 0;
  for (NodeRef r : s.reachable(root)) {
    const Node& n = s.node(r);
    if (n.kind != NodeKind::Or || n.children.size() < 2) continue;
    if (complementary_guard(s, r)) continue;
    // distinct simple terms over one variable set are pairwise contradictory
    {
      bool simple = true;
      std::optional<std::vector<Var>> shared;
      for (NodeRef c : n.children) {
        if (s.kind(c) == NodeKind::False) continue;
        auto t = node_term_view(s, c);
        if (!t || has_complementary_pair(*t)) { simple = false; break; }
        if (!shared) shared = s.vars_of(c);
        else if (*shared != s.vars_of(c)) { simple = false; break; }
      }
      if (simple) continue;
    }
    if (s.vars_of(r).size() <= lim.model_cap) {
      if (!pairwise_disjoint_bf(s, n.children, lim)) return property_no(r);
    } else if (!saw_unknown) {
      saw_unknown = true;
      unknown_at = r;
    }
  }
  if (saw_unknown) return {Tri::unknown, unknown_at};
  return property_yes();
}

/// Height at most 2.
inline bool is_flat(const NnfStore& s, NodeRef root) {
  return s.height(root) <= 2;
}

/// Every disjunction is a clause: leaf children over pairwise distinct
/// variables.
inline PropertyResult is_simple_disjunction(const NnfStore& s, NodeRef root) {
  for (NodeRef r : s.reachable(root)) {
    const Node& n = s.node(r);
    if (n.kind != NodeKind::Or) continue;
    std::vector<Var> seen;
    for (NodeRef c : n.children) {
      if (s.kind(c) != NodeKind::Lit) return property_no(r);
      seen.push_back(s.node(c).lit.var);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      return property_no(r);
  }
  return property_yes();
}

/// Every conjunction is a term, dually.
inline PropertyResult is_simple_conjunction(const NnfStore& s, NodeRef root) {
  for (NodeRef r : s.reachable(root)) {
    const Node& n = s.node(r);
    if (n.kind != NodeKind::And) continue;
    std::vector<Var> seen;
    for (NodeRef c : n.children) {
      if (s.kind(c) != NodeKind::Lit) return property_no(r);
      seen.push_back(s.node(c).lit.var);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      return property_no(r);
  }
  return property_yes();
}

// ---------------------------------------------------------------------------
// Decision, read-once, ordering

/// The root and every node reachable through branches is a decision node:
/// true, false, or (X ∧ α) ∨ (¬X ∧ β) with decision branches. A bare
/// literal is not a decision node.
inline PropertyResult is_decision_sentence(const NnfStore& s, NodeRef root) {
  std::unordered_map<NodeRef, bool> memo;
  std::optional<NodeRef> witness;
  auto rec = [&](auto&& self, NodeRef r) -> bool {
    if (s.is_const(r)) return true;
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    auto v = decision_view(s, r);
    bool ok = false;
    if (!v) {
      if (!witness) witness = r;
    } else {
      ok = self(self, v->hi) && self(self, v->lo);
      if (!ok && !witness) witness = r;
    }
    memo.emplace(r, ok);
    return ok;
  };
  if (rec(rec, root)) return property_yes();
  return property_no(witness.value_or(root));
}

/// No root-to-leaf path in the decision-diagram view tests a variable twice.
/// Presupposes a decision sentence; equivalent to decomposability there.
inline PropertyResult read_once(const NnfStore& s, NodeRef root) {
  auto dec = is_decision_sentence(s, root);
  if (!dec.is_yes()) return dec;
  std::unordered_map<NodeRef, std::vector<Var>> below;  // dVars reachable
  std::optional<NodeRef> witness;
  auto rec = [&](auto&& self, NodeRef r) -> const std::vector<Var>& {
    static const std::vector<Var> kEmpty;
    if (s.is_const(r)) return kEmpty;
    auto it = below.find(r);
    if (it != below.end()) return it->second;
    DecisionView v = *decision_view(s, r);
    std::vector<Var> vars = union_vars(self(self, v.hi), self(self, v.lo));
    if (std::binary_search(vars.begin(), vars.end(), v.var) && !witness)
      witness = r;
    vars = union_vars(vars, {v.var});
    return below.emplace(r, std::move(vars)).first->second;
  };
  rec(rec, root);
  if (witness) return property_no(*witness);
  return property_yes();
}

/// A total order consistent with every ancestor/descendant decision-variable
/// pair, lexicographically least; nothing when the pairs are contradictory.
inline std::optional<VarOrder> ordering_of(const NnfStore& s, NodeRef root) {
  return least_consistent_order(s.num_vars(), decision_constraints(s, root));
}

/// All observed decision-variable pairs respect the given order.
inline bool respects_order(const NnfStore& s, NodeRef root,
                           const VarOrder& order) {
  for (auto [a, b] : decision_constraints(s, root))
    if (!order.precedes(a, b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// PI / IP canonical-form checks (semantic, oracle-capped)

/// 1 iff the clause set is exactly the prime implicates of the sentence:
/// (a) an antichain under subsumption, (b) every clause is a prime
/// implicate, (c) every prime implicate is subsumed by some clause.
/// Unknown beyond the oracle cap. Throws unless the sentence is in CNF shape.
inline Tri is_pi(const NnfStore& s, NodeRef root, const OracleLimits& lim = {}) {
  auto clauses = clause_view(s, root);
  if (!clauses) throw PreconditionError("is_pi requires a CNF sentence");
  for (std::size_t i = 0; i < clauses->size(); ++i) {
    if (valid_clause((*clauses)[i])) return Tri::no;  // tautologies never prime
    for (std::size_t j = 0; j < clauses->size(); ++j)
      if (i != j && lits_subset((*clauses)[i], (*clauses)[j])) return Tri::no;
  }
  if (s.vars_of(root).size() > lim.clause_cap) return Tri::unknown;
  std::vector<Clause> prime = prime_implicates_bf(s, root, lim);
  for (const Clause& c : *clauses)
    if (!std::binary_search(prime.begin(), prime.end(), c)) return Tri::no;
  for (const Clause& p : prime) {
    bool covered = false;
    for (const Clause& c : *clauses)
      if (lits_subset(c, p)) { covered = true; break; }
    if (!covered) return Tri::no;
  }
  return Tri::yes;
}

/// Dual check for prime implicants form over a DNF sentence.
inline Tri is_ip(const NnfStore& s, NodeRef root, const OracleLimits& lim = {}) {
  auto terms = term_view(s, root);
  if (!terms) throw PreconditionError("is_ip requires a DNF sentence");
  for (std::size_t i = 0; i < terms->size(); ++i) {
    if (has_complementary_pair((*terms)[i])) return Tri::no;
    for (std::size_t j = 0; j < terms->size(); ++j)
      if (i != j && lits_subset((*terms)[i], (*terms)[j])) return Tri::no;
  }
  if (s.vars_of(root).size() > lim.clause_cap) return Tri::unknown;
  std::vector<Term> prime = prime_implicants_bf(s, root, lim);
  for (const Term& t : *terms)
    if (!std::binary_search(prime.begin(), prime.end(), t)) return Tri::no;
  for (const Term& p : prime) {
    bool covered = false;
    for (const Term& t : *terms)
      if (lits_subset(t, p)) { covered = true; break; }
    if (!covered) return Tri::no;
  }
  return Tri::yes;
}

// ---------------------------------------------------------------------------
// Classification

struct ClassificationReport {
  std::array<Tri, kLangCount> value{};
  std::array<std::optional<NodeRef>, kLangCount> witness{};
  std::optional<VarOrder> order_used;  // order backing the OBDD_< verdict

  Tri get(Lang l) const { return value[static_cast<unsigned>(l)]; }
  std::optional<NodeRef> witness_of(Lang l) const {
    return witness[static_cast<unsigned>(l)];
  }
  bool definite(Lang l) const { return get(l) == Tri::yes; }

  std::vector<Lang> definite_tags() const {
    std::vector<Lang> out;
    for (Lang l : all_langs)
      if (definite(l)) out.push_back(l);
    return out;
  }
};

namespace detail {
inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
  return Tri::yes;
}
}  // namespace detail

/// Classify into all sixteen tags. Membership for OBDD_< is judged against
/// `order` when given, otherwise against the inferred least consistent
/// order (so it coincides with OBDD). Constant sentences belong to every
/// language.
inline ClassificationReport classify(const NnfStore& s, NodeRef root,
                                     const std::optional<VarOrder>& order = {},
                                     const OracleLimits& lim = {}) {
  ClassificationReport rep;
  auto set = [&](Lang l, Tri v, std::optional<NodeRef> w = {}) {
    rep.value[static_cast<unsigned>(l)] = v;
    rep.witness[static_cast<unsigned>(l)] = w;
  };
  auto from = [&](const PropertyResult& p) { return p; };

  PropertyResult decomp = from(is_decomposable(s, root));
  PropertyResult det = is_deterministic(s, root, lim);
  PropertyResult smoothp = is_smooth(s, root);
  bool flat = is_flat(s, root);
  PropertyResult sdisj = is_simple_disjunction(s, root);
  PropertyResult sconj = is_simple_conjunction(s, root);
  PropertyResult dec = is_decision_sentence(s, root);

  set(Lang::NNF, Tri::yes);
  set(Lang::DNNF, decomp.value, decomp.witness);
  set(Lang::D_NNF, det.value, det.witness);
  set(Lang::S_NNF, smoothp.value, smoothp.witness);
  set(Lang::F_NNF, flat ? Tri::yes : Tri::no,
      flat ? std::nullopt : std::optional<NodeRef>(root));

  Tri ddnnf = detail::tri_and(decomp.value, det.value);
  set(Lang::D_DNNF, ddnnf, decomp.is_yes() ? det.witness : decomp.witness);
  set(Lang::SD_DNNF, detail::tri_and(ddnnf, smoothp.value),
      ddnnf == Tri::yes ? smoothp.witness
                        : (decomp.is_yes() ? det.witness : decomp.witness));

  set(Lang::BDD, dec.value, dec.witness);
  Tri fbdd = detail::tri_and(dec.value, decomp.value);
  auto fbdd_wit = dec.is_yes() ? decomp.witness : dec.witness;
  set(Lang::FBDD, fbdd, fbdd_wit);

  if (fbdd == Tri::yes) {
    auto inferred = ordering_of(s, root);
    set(Lang::OBDD, inferred ? Tri::yes : Tri::no,
        inferred ? std::nullopt : std::optional<NodeRef>(root));
    if (order) {
      bool ok = respects_order(s, root, *order);
      set(Lang::OBDD_LT, ok ? Tri::yes : Tri::no,
          ok ? std::nullopt : std::optional<NodeRef>(root));
      rep.order_used = *order;
    } else {
      set(Lang::OBDD_LT, inferred ? Tri::yes : Tri::no,
          inferred ? std::nullopt : std::optional<NodeRef>(root));
      rep.order_used = inferred;
    }
  } else {
    set(Lang::OBDD, fbdd, fbdd_wit);
    set(Lang::OBDD_LT, fbdd, fbdd_wit);
    if (order) rep.order_used = *order;
  }

  Tri dnf = detail::tri_and(flat ? Tri::yes : Tri::no, sconj.value);
  set(Lang::DNF, dnf, flat ? sconj.witness : std::optional<NodeRef>(root));
  Tri cnf = detail::tri_and(flat ? Tri::yes : Tri::no, sdisj.value);
  set(Lang::CNF, cnf, flat ? sdisj.witness : std::optional<NodeRef>(root));

  if (cnf == Tri::yes) {
    set(Lang::PI, is_pi(s, root, lim));
  } else {
    set(Lang::PI, cnf, rep.witness_of(Lang::CNF));
  }
  if (dnf == Tri::yes) {
    set(Lang::IP, is_ip(s, root, lim));
  } else {
    set(Lang::IP, dnf, rep.witness_of(Lang::DNF));
  }

  Tri mods = detail::tri_and(dnf, detail::tri_and(smoothp.value, det.value));
  set(Lang::MODS, mods,
      dnf == Tri::yes
          ? (smoothp.is_yes() ? det.witness : smoothp.witness)
          : rep.witness_of(Lang::DNF));

  return rep;
}

}  // namespace nnfkit
