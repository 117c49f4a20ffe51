/// @file  queries.hpp
/// @brief The eight queries (CO, VA, CE, IM, EQ, SE, CT, ME) per language,
///        gated by the capability matrix. Unsupported pairs hard-error.

#pragma once

#include <functional>

#include "transforms.hpp"

namespace nnfkit {

struct QueryOptions {
  OracleLimits limits{};
  std::optional<VarOrder> order{};
};

namespace detail {

inline bool counting_family(Lang l) {
  return l == Lang::D_DNNF || l == Lang::SD_DNNF || l == Lang::FBDD ||
         l == Lang::OBDD || l == Lang::OBDD_LT;
}
inline bool bdd_family(Lang l) {
  return l == Lang::BDD || l == Lang::FBDD || l == Lang::OBDD ||
         l == Lang::OBDD_LT;
}

/// Structural consistency pass, sound under decomposability: literals and
/// true are consistent, a conjunction is consistent iff all children are,
/// a disjunction iff some child is.
inline bool co_decomposable(const NnfStore& s, NodeRef root) {
  std::unordered_map<NodeRef, bool> val;
  for (NodeRef r : s.reachable(root)) {
    const Node& n = s.node(r);
    switch (n.kind) {
      case NodeKind::True:
      case NodeKind::Lit: val[r] = true; break;
      case NodeKind::False: val[r] = false; break;
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

inline bool co_route(const NnfStore& s, NodeRef root, Lang lang) {
  switch (lang) {
    case Lang::DNNF:
    case Lang::D_DNNF:
    case Lang::SD_DNNF:
    case Lang::FBDD:
    case Lang::OBDD:
    case Lang::OBDD_LT:
      return co_decomposable(s, root);
    case Lang::DNF:
    case Lang::MODS:
    case Lang::IP: {
      auto terms = term_view(s, root);
      for (const Term& t : *terms)
        if (consistent_term(t)) return true;
      return false;
    }
    case Lang::PI: {
      auto clauses = clause_view(s, root);
      for (const Clause& c : *clauses)
        if (c.empty()) return false;  // the constant false clause
      return true;
    }
    default:
      throw CapabilityError("no consistency route for " +
                            std::string(to_string(lang)));
  }
}

inline BigInt pow2(std::size_t k) { return BigInt(1) << k; }

/// Model count over `over` for the counting family: smooth, then one
/// bottom-up arithmetic pass, then scale by the universe gap.
inline BigInt ct_counting(NnfStore& s, NodeRef root,
                          const std::vector<Var>& over) {
  NodeRef sm = smooth(s, root);
  std::unordered_map<NodeRef, BigInt> cnt;
  for (NodeRef r : s.reachable(sm)) {
    const Node& n = s.node(r);
    switch (n.kind) {
      case NodeKind::True:
      case NodeKind::Lit: cnt[r] = 1; break;
      case NodeKind::False: cnt[r] = 0; break;
      case NodeKind::And: {
        BigInt v = 1;
        for (NodeRef c : n.children) v *= cnt[c];
        cnt[r] = std::move(v);
        break;
      }
      case NodeKind::Or: {
        BigInt v = 0;
        for (NodeRef c : n.children) v += cnt[c];
        cnt[r] = std::move(v);
        break;
      }
    }
  }
  return cnt[sm] * pow2(over.size() - s.vars_of(root).size());
}

inline BigInt ct_route(NnfStore& s, NodeRef root, Lang lang,
                       const std::vector<Var>& over) {
  if (lang == Lang::MODS) {
    auto terms = term_view(s, root);
    return BigInt(terms->size()) * pow2(over.size() - s.vars_of(root).size());
  }
  return ct_counting(s, root, over);
}

inline bool va_route(NnfStore& s, NodeRef root, Lang lang) {
  std::vector<Var> over;
  for (Var v = 1; v <= s.num_vars(); ++v) over.push_back(v);
  switch (lang) {
    case Lang::CNF:
    case Lang::PI: {
      auto clauses = clause_view(s, root);
      for (const Clause& c : *clauses)
        if (!valid_clause(c)) return false;
      return true;
    }
    case Lang::IP: {
      auto terms = term_view(s, root);
      for (const Term& t : *terms)
        if (t.empty()) return true;
      return false;
    }
    case Lang::MODS:
    default:
      return ct_route(s, root, lang, over) == pow2(over.size());
  }
}

/// Sorted model masks over `over` for a term-set sentence (MODS view).
inline std::vector<std::uint64_t> mods_models(const NnfStore& s, NodeRef root,
                                              const std::vector<Var>& over) {
  auto terms = term_view(s, root);
  std::vector<std::uint64_t> out;
  const std::size_t n = over.size();
  for (const Term& t : *terms) {
    if (has_complementary_pair(t)) continue;
    std::uint64_t fixed_mask = 0, fixed_val = 0;
    for (const Literal& l : t) {
      auto it = std::lower_bound(over.begin(), over.end(), l.var);
      auto i = static_cast<std::size_t>(it - over.begin());
      std::uint64_t bit = 1ull << (n - 1 - i);
      fixed_mask |= bit;
      if (l.positive) fixed_val |= bit;
    }
    for_each_in_subcube(n, fixed_mask, fixed_val, [&](std::uint64_t m) {
      out.push_back(m);
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// CO / VA

inline bool co(NnfStore& s, NodeRef root, Lang lang,
               const QueryOptions& opt = {}) {
  require_query(lang, Query::CO);
  require_member(s, root, lang, opt.order, opt.limits);
  return detail::co_route(s, root, lang);
}

inline bool va(NnfStore& s, NodeRef root, Lang lang,
               const QueryOptions& opt = {}) {
  require_query(lang, Query::VA);
  require_member(s, root, lang, opt.order, opt.limits);
  return detail::va_route(s, root, lang);
}

// ---------------------------------------------------------------------------
// CE / IM

/// Σ ⊨ γ for a clause γ. Valid clauses short-circuit to 1; otherwise Σ | ¬γ
/// is tested for inconsistency (PI uses clause subsumption directly).
inline bool ce(NnfStore& s, NodeRef root, Lang lang, Clause gamma,
               const QueryOptions& opt = {}) {
  gamma = normalize_lits(std::move(gamma));
  if (valid_clause(gamma)) return true;
  require_query(lang, Query::CE);
  require_member(s, root, lang, opt.order, opt.limits);
  if (lang == Lang::PI) {
    auto clauses = clause_view(s, root);
    for (const Clause& c : *clauses)
      if (lits_subset(c, gamma)) return true;
    return false;
  }
  NodeRef cond = detail::condition_route(s, root, negate_lits(gamma), lang);
  return !detail::co_route(s, cond, lang);
}

/// γ ⊨ Σ for a consistent term γ.
inline bool im(NnfStore& s, NodeRef root, Lang lang, Term gamma,
               const QueryOptions& opt = {}) {
  gamma = normalize_lits(std::move(gamma));
  if (!consistent_term(gamma))
    throw PreconditionError("implicant query term is inconsistent");
  require_query(lang, Query::IM);
  require_member(s, root, lang, opt.order, opt.limits);
  switch (lang) {
    case Lang::CNF:
    case Lang::PI: {
      auto clauses = clause_view(s, root);
      for (const Clause& c : *clauses) {
        if (valid_clause(c)) continue;
        bool shares = false;
        for (const Literal& l : c)
          if (std::binary_search(gamma.begin(), gamma.end(), l)) {
            shares = true;
            break;
          }
        if (!shares) return false;
      }
      return true;
    }
    case Lang::IP: {
      auto terms = term_view(s, root);
      for (const Term& t : *terms)
        if (lits_subset(t, gamma)) return true;
      return false;
    }
    default: {
      NodeRef cond = detail::condition_route(s, root, gamma, lang);
      return detail::va_route(s, cond, lang);
    }
  }
}

// ---------------------------------------------------------------------------
// EQ / SE

inline bool eq(NnfStore& s, NodeRef a, NodeRef b, Lang lang,
               const QueryOptions& opt = {}) {
  require_query(lang, Query::EQ);
  require_member(s, a, lang, opt.order, opt.limits);
  require_member(s, b, lang, opt.order, opt.limits);
  switch (lang) {
    case Lang::OBDD:
    case Lang::OBDD_LT: {
      std::array<NodeRef, 2> roots{a, b};
      VarOrder target = VarOrder::identity(0);
      if (lang == Lang::OBDD_LT) {
        target = choose_order(s, roots, opt.order);  // same order required
      } else {
        try {
          target = choose_order(s, roots, opt.order);
        } catch (const PreconditionError&) {
          // no common order: rebuild b under a's order (desk-scale route)
          std::array<NodeRef, 1> ra{a};
          target = choose_order(s, ra, std::nullopt);
        }
      }
      return obdd_rebuild(s, a, target) == obdd_rebuild(s, b, target);
    }
    case Lang::PI: {
      auto ca = *clause_view(s, a), cb = *clause_view(s, b);
      std::sort(ca.begin(), ca.end());
      std::sort(cb.begin(), cb.end());
      return ca == cb;  // canonical form
    }
    case Lang::IP: {
      auto ta = *term_view(s, a), tb = *term_view(s, b);
      std::sort(ta.begin(), ta.end());
      std::sort(tb.begin(), tb.end());
      return ta == tb;
    }
    case Lang::MODS: {
      std::vector<Var> over = union_vars(s.vars_of(a), s.vars_of(b));
      return detail::mods_models(s, a, over) == detail::mods_models(s, b, over);
    }
    default:
      throw CapabilityError("no equivalence route for " +
                            std::string(to_string(lang)));
  }
}

inline bool se(NnfStore& s, NodeRef a, NodeRef b, Lang lang,
               const QueryOptions& opt = {}) {
  require_query(lang, Query::SE);
  require_member(s, a, lang, opt.order, opt.limits);
  require_member(s, b, lang, opt.order, opt.limits);
  switch (lang) {
    case Lang::OBDD_LT: {
      std::array<NodeRef, 2> roots{a, b};
      VarOrder order = choose_order(s, roots, opt.order);
      NodeRef conj = obdd_apply(s, a, bdd_negate(s, b), true, order);
      return !detail::co_route(s, conj, Lang::OBDD_LT);
    }
    case Lang::PI: {
      auto ca = *clause_view(s, a);
      auto cb = *clause_view(s, b);
      for (const Clause& g : cb) {
        if (valid_clause(g)) continue;
        bool ok = false;
        for (const Clause& c : ca)
          if (lits_subset(c, g)) { ok = true; break; }
        if (!ok) return false;
      }
      return true;
    }
    case Lang::IP: {
      auto ta = *term_view(s, a);
      auto tb = *term_view(s, b);
      for (const Term& t : ta) {
        if (has_complementary_pair(t)) continue;
        bool ok = false;
        for (const Term& u : tb)
          if (lits_subset(u, t)) { ok = true; break; }
        if (!ok) return false;
      }
      return true;
    }
    case Lang::MODS: {
      std::vector<Var> over = union_vars(s.vars_of(a), s.vars_of(b));
      auto ma = detail::mods_models(s, a, over);
      auto mb = detail::mods_models(s, b, over);
      return std::includes(mb.begin(), mb.end(), ma.begin(), ma.end());
    }
    default:
      throw CapabilityError("no sentential-entailment route for " +
                            std::string(to_string(lang)));
  }
}

// ---------------------------------------------------------------------------
// CT / ME

/// Number of models over `over` (arbitrary precision).
inline BigInt ct(NnfStore& s, NodeRef root, Lang lang, std::vector<Var> over,
                 const QueryOptions& opt = {}) {
  require_query(lang, Query::CT);
  require_member(s, root, lang, opt.order, opt.limits);
  std::sort(over.begin(), over.end());
  over.erase(std::unique(over.begin(), over.end()), over.end());
  const auto& vs = s.vars_of(root);
  if (!std::includes(over.begin(), over.end(), vs.begin(), vs.end()))
    throw PreconditionError("count universe must contain vars of the sentence");
  return detail::ct_route(s, root, lang, over);
}

/// Stream every model over `over` exactly once, in lexicographic order of
/// the bit-strings over the sorted variable set.
inline void me(NnfStore& s, NodeRef root, Lang lang, std::vector<Var> over,
               const std::function<void(const Assignment&)>& sink,
               const QueryOptions& opt = {}) {
  require_query(lang, Query::ME);
  require_member(s, root, lang, opt.order, opt.limits);
  std::sort(over.begin(), over.end());
  over.erase(std::unique(over.begin(), over.end()), over.end());
  const auto& vs = s.vars_of(root);
  if (!std::includes(over.begin(), over.end(), vs.begin(), vs.end()))
    throw PreconditionError("enumeration universe must contain vars of the sentence");
  if (over.size() > 63)
    throw PreconditionError("enumeration universe too large to pack");
  if (!detail::co_route(s, root, lang)) return;
  std::uint64_t mask = 0;
  auto rec = [&](auto&& self, NodeRef cur, std::size_t i) -> void {
    if (i == over.size()) {
      sink(Assignment{over, mask});
      return;
    }
    std::uint64_t bit = 1ull << (over.size() - 1 - i);
    NodeRef lo = detail::condition_route(s, cur, {Literal(over[i], false)}, lang);
    if (detail::co_route(s, lo, lang)) {
      mask &= ~bit;
      self(self, lo, i + 1);
    }
    NodeRef hi = detail::condition_route(s, cur, {Literal(over[i], true)}, lang);
    if (detail::co_route(s, hi, lang)) {
      mask |= bit;
      self(self, hi, i + 1);
      mask &= ~bit;
    }
  };
  rec(rec, root, 0);
}

/// Convenience collector for ME.
inline ModelSet me_collect(NnfStore& s, NodeRef root, Lang lang,
                           std::vector<Var> over, const QueryOptions& opt = {}) {
  ModelSet out;
  std::sort(over.begin(), over.end());
  over.erase(std::unique(over.begin(), over.end()), over.end());
  out.vars = over;
  me(s, root, lang, over, [&](const Assignment& a) { out.models.push_back(a.mask); },
     opt);
  return out;
}

}  // namespace nnfkit
