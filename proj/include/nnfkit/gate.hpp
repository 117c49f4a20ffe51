/// @file  gate.hpp
/// @brief Language-membership gating for queries and transformations.
///
/// Gates reject operands that are *definitely* not in the declared language;
/// oracle-capped "unknown" membership passes (large instances stay usable,
/// classify still reports the honest unknown). CNF/DNF membership here is
/// the classical clause/term view, which tolerates complementary literals.

#pragma once

#include "properties.hpp"

namespace nnfkit {

/// Witness node when the sentence is definitely not in `lang`.
inline std::optional<NodeRef> not_in_language(
    const NnfStore& s, NodeRef root, Lang lang,
    const std::optional<VarOrder>& order = {}, const OracleLimits& lim = {}) {
  auto no_of = [&](const PropertyResult& p) -> std::optional<NodeRef> {
    if (p.is_no()) return p.witness ? p.witness : std::optional<NodeRef>(root);
    return std::nullopt;
  };
  switch (lang) {
    case Lang::NNF:
      return std::nullopt;
    case Lang::DNNF:
      return no_of(is_decomposable(s, root));
    case Lang::D_NNF:
      return no_of(is_deterministic(s, root, lim));
    case Lang::S_NNF:
      return no_of(is_smooth(s, root));
    case Lang::F_NNF:
      if (!is_flat(s, root)) return root;
      return std::nullopt;
    case Lang::D_DNNF:
      if (auto w = no_of(is_decomposable(s, root))) return w;
      return no_of(is_deterministic(s, root, lim));
    case Lang::SD_DNNF:
      if (auto w = no_of(is_decomposable(s, root))) return w;
      if (auto w = no_of(is_smooth(s, root))) return w;
      return no_of(is_deterministic(s, root, lim));
    case Lang::BDD:
      return no_of(is_decision_sentence(s, root));
    case Lang::FBDD:
      if (auto w = no_of(is_decision_sentence(s, root))) return w;
      return no_of(is_decomposable(s, root));
    case Lang::OBDD: {
      if (auto w = not_in_language(s, root, Lang::FBDD, order, lim)) return w;
      if (!ordering_of(s, root)) return root;
      return std::nullopt;
    }
    case Lang::OBDD_LT: {
      if (auto w = not_in_language(s, root, Lang::FBDD, order, lim)) return w;
      if (order) {
        if (!respects_order(s, root, *order)) return root;
      } else if (!ordering_of(s, root)) {
        return root;
      }
      return std::nullopt;
    }
    case Lang::DNF: {
      if (!term_view(s, root)) return root;
      return std::nullopt;
    }
    case Lang::CNF: {
      if (!clause_view(s, root)) return root;
      return std::nullopt;
    }
    case Lang::PI: {
      if (!clause_view(s, root)) return root;
      if (is_pi(s, root, lim) == Tri::no) return root;
      return std::nullopt;
    }
    case Lang::IP: {
      if (!term_view(s, root)) return root;
      if (is_ip(s, root, lim) == Tri::no) return root;
      return std::nullopt;
    }
    case Lang::MODS: {
      auto terms = term_view(s, root);
      if (!terms) return root;
      std::optional<std::vector<Var>> shared;
      for (const Term& t : *terms) {
        if (has_complementary_pair(t)) return root;  // not a model term
        std::vector<Var> vs;
        for (const Literal& l : t) vs.push_back(l.var);
        if (!shared) shared = std::move(vs);
        else if (*shared != vs) return root;  // not smooth
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline void require_member(const NnfStore& s, NodeRef root, Lang lang,
                           const std::optional<VarOrder>& order = {},
                           const OracleLimits& lim = {}) {
  if (auto w = not_in_language(s, root, lang, order, lim))
    throw CapabilityError("sentence is not in " + std::string(to_string(lang)) +
                          " (witness node " + std::to_string(*w) + ")");
}

/// Order backing an OBDD_< operation: the explicit one when given (operands
/// must respect it), otherwise the least order consistent with all operands.
inline VarOrder choose_order(const NnfStore& s, std::span<const NodeRef> roots,
                             const std::optional<VarOrder>& explicit_order) {
  if (explicit_order) {
    for (NodeRef r : roots)
      if (!respects_order(s, r, *explicit_order))
        throw PreconditionError(
            "operand does not respect the given variable order");
    return *explicit_order;
  }
  std::vector<std::pair<Var, Var>> constraints;
  for (NodeRef r : roots) {
    auto c = decision_constraints(s, r);
    constraints.insert(constraints.end(), c.begin(), c.end());
  }
  auto order = least_consistent_order(s.num_vars(), constraints);
  if (!order)
    throw PreconditionError("operands do not share a consistent variable order");
  return *order;
}

}  // namespace nnfkit
