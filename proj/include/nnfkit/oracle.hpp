/// @file  oracle.hpp
/// @brief Exponential-time ground-truth semantics: truth tables, brute-force
///        equivalence/entailment, prime implicates/implicants.
///
/// The oracle is the trust anchor for every property test. Caps are hard
/// errors, never silent truncation.

#pragma once

#include <cstdint>
#include <span>

#include "store.hpp"

namespace nnfkit {

struct OracleLimits {
  unsigned model_cap = 20;   // max variables for truth-table enumeration
  unsigned clause_cap = 14;  // max variables for prime implicate/implicant search
};

namespace detail {
inline void check_model_cap(std::size_t n, const OracleLimits& lim) {
  if (n > lim.model_cap)
    throw CapExceededError("oracle cap exceeded: " + std::to_string(n) +
                           " variables > model cap " +
                           std::to_string(lim.model_cap));
}

/// Evaluate root once per mask over `vars`; reachable set is computed once.
class TableEvaluator {
public:
  TableEvaluator(const NnfStore& s, NodeRef root, std::vector<Var> vars)
      : store_(s), vars_(std::move(vars)), order_(s.reachable(root)), root_(root) {
    val_.resize(order_.empty() ? 0 : order_.back() + 1);
    for (Var v : store_.vars_of(root))
      if (!std::binary_search(vars_.begin(), vars_.end(), v))
        throw MissingVariableError(
            "sentence mentions variable " + std::to_string(v) +
            " outside the requested assignment set");
  }

  bool operator()(std::uint64_t mask) {
    const std::size_t n = vars_.size();
    for (NodeRef r : order_) {
      const Node& node = store_.node(r);
      bool v = false;
      switch (node.kind) {
        case NodeKind::True: v = true; break;
        case NodeKind::False: v = false; break;
        case NodeKind::Lit: {
          auto it = std::lower_bound(vars_.begin(), vars_.end(), node.lit.var);
          auto i = static_cast<std::size_t>(it - vars_.begin());
          bool bit = (mask >> (n - 1 - i)) & 1u;
          v = bit == node.lit.positive;
          break;
        }
        case NodeKind::And:
          v = true;
          for (NodeRef c : node.children) v = v && val_[c];
          break;
        case NodeKind::Or:
          v = false;
          for (NodeRef c : node.children) v = v || val_[c];
          break;
      }
      val_[r] = v;
    }
    return val_[root_];
  }

private:
  const NnfStore& store_;
  std::vector<Var> vars_;
  std::vector<NodeRef> order_;
  NodeRef root_;
  std::vector<char> val_;
};
}  // namespace detail

/// All satisfying total assignments over `over`, sorted lexicographically.
/// Requires vars(root) ⊆ over and |over| within the model cap.
inline ModelSet models_bf(const NnfStore& s, NodeRef root, std::vector<Var> over,
                          const OracleLimits& lim = {}) {
  std::sort(over.begin(), over.end());
  over.erase(std::unique(over.begin(), over.end()), over.end());
  detail::check_model_cap(over.size(), lim);
  detail::TableEvaluator eval(s, root, over);
  ModelSet out;
  out.vars = over;
  const std::uint64_t total = 1ull << over.size();
  for (std::uint64_t m = 0; m < total; ++m)
    if (eval(m)) out.models.push_back(m);
  return out;
}

/// Truth-table equality over the union of the operands' variables.
inline bool equivalent_bf(const NnfStore& sa, NodeRef a, const NnfStore& sb,
                          NodeRef b, const OracleLimits& lim = {}) {
  std::vector<Var> over = union_vars(sa.vars_of(a), sb.vars_of(b));
  detail::check_model_cap(over.size(), lim);
  detail::TableEvaluator ea(sa, a, over), eb(sb, b, over);
  const std::uint64_t total = 1ull << over.size();
  for (std::uint64_t m = 0; m < total; ++m)
    if (ea(m) != eb(m)) return false;
  return true;
}
inline bool equivalent_bf(const NnfStore& s, NodeRef a, NodeRef b,
                          const OracleLimits& lim = {}) {
  return equivalent_bf(s, a, s, b, lim);
}

/// Truth-table containment: every model of a satisfies b.
inline bool entails_bf(const NnfStore& sa, NodeRef a, const NnfStore& sb,
                       NodeRef b, const OracleLimits& lim = {}) {
  std::vector<Var> over = union_vars(sa.vars_of(a), sb.vars_of(b));
  detail::check_model_cap(over.size(), lim);
  detail::TableEvaluator ea(sa, a, over), eb(sb, b, over);
  const std::uint64_t total = 1ull << over.size();
  for (std::uint64_t m = 0; m < total; ++m)
    if (ea(m) && !eb(m)) return false;
  return true;
}
inline bool entails_bf(const NnfStore& s, NodeRef a, NodeRef b,
                       const OracleLimits& lim = {}) {
  return entails_bf(s, a, s, b, lim);
}

inline bool consistent_bf(const NnfStore& s, NodeRef root,
                          const OracleLimits& lim = {}) {
  std::vector<Var> over = s.vars_of(root);
  detail::check_model_cap(over.size(), lim);
  detail::TableEvaluator eval(s, root, over);
  const std::uint64_t total = 1ull << over.size();
  for (std::uint64_t m = 0; m < total; ++m)
    if (eval(m)) return true;
  return false;
}

inline bool valid_bf(const NnfStore& s, NodeRef root,
                     const OracleLimits& lim = {}) {
  std::vector<Var> over = s.vars_of(root);
  detail::check_model_cap(over.size(), lim);
  detail::TableEvaluator eval(s, root, over);
  const std::uint64_t total = 1ull << over.size();
  for (std::uint64_t m = 0; m < total; ++m)
    if (!eval(m)) return false;
  return true;
}

namespace detail {
/// Truth table of root over its own variables as a flat bit vector.
inline std::vector<char> truth_table(const NnfStore& s, NodeRef root,
                                     const std::vector<Var>& vars) {
  TableEvaluator eval(s, root, vars);
  std::vector<char> tt(1ull << vars.size());
  for (std::uint64_t m = 0; m < tt.size(); ++m) tt[m] = eval(m);
  return tt;
}

/// Walk all masks of the subcube where the chosen vars are fixed.
/// `fixed_mask` selects the fixed positions (bit n-1-i for vars[i]),
/// `fixed_val` their values. Calls f(mask) for each full mask; stops early
/// when f returns false.
inline bool for_each_in_subcube(std::size_t n, std::uint64_t fixed_mask,
                                std::uint64_t fixed_val,
                                const std::function<bool(std::uint64_t)>& f) {
  std::uint64_t free_mask = ((n == 64 ? ~0ull : (1ull << n) - 1)) & ~fixed_mask;
  std::uint64_t sub = 0;
  while (true) {
    if (!f(sub | fixed_val)) return false;
    if (sub == free_mask) return true;
    sub = (sub - free_mask) & free_mask;  // next submask of free_mask
  }
}
}  // namespace detail

/// Exactly the subsumption-minimal clauses entailed by the sentence, as an
/// antichain sorted canonically. Enumerates clauses in increasing length,
/// pruning supersets of accepted clauses.
inline std::vector<Clause> prime_implicates_bf(const NnfStore& s, NodeRef root,
                                               const OracleLimits& lim = {}) {
  const std::vector<Var> vars = s.vars_of(root);
  const std::size_t n = vars.size();
  if (n > lim.clause_cap)
    throw CapExceededError("oracle cap exceeded: " + std::to_string(n) +
                           " variables > clause cap " +
                           std::to_string(lim.clause_cap));
  std::vector<char> tt = detail::truth_table(s, root, vars);
  std::vector<Clause> accepted;

  // A clause over chosen vars with polarities `pol` is entailed iff no model
  // sits in the subcube falsifying every literal.
  std::vector<std::size_t> idx;
  auto consider = [&](const std::vector<std::size_t>& positions,
                      std::uint64_t pol) {
    Clause c;
    std::uint64_t fixed_mask = 0, fixed_val = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
      std::size_t i = positions[j];
      bool positive = (pol >> j) & 1u;
      c.push_back(Literal(vars[i], positive));
      std::uint64_t bit = 1ull << (n - 1 - i);
      fixed_mask |= bit;
      if (!positive) fixed_val |= bit;  // falsify: negative literal true var
    }
    for (const Clause& a : accepted)
      if (lits_subset(a, c)) return;
    bool entailed = detail::for_each_in_subcube(
        n, fixed_mask, fixed_val,
        [&](std::uint64_t m) { return !tt[m]; });
    if (entailed) accepted.push_back(std::move(c));
  };

  // combinations of k variable positions, lexicographic
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      for (std::uint64_t pol = 0; pol < (1ull << k); ++pol) consider(comb, pol);
      // next combination
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (k == 0 && !accepted.empty()) break;  // inconsistent: empty clause wins
  }
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

/// Exactly the shortest (entailment-maximal) implicant terms, an antichain.
inline std::vector<Term> prime_implicants_bf(const NnfStore& s, NodeRef root,
                                             const OracleLimits& lim = {}) {
  const std::vector<Var> vars = s.vars_of(root);
  const std::size_t n = vars.size();
  if (n > lim.clause_cap)
    throw CapExceededError("oracle cap exceeded: " + std::to_string(n) +
                           " variables > clause cap " +
                           std::to_string(lim.clause_cap));
  std::vector<char> tt = detail::truth_table(s, root, vars);
  std::vector<Term> accepted;

  auto consider = [&](const std::vector<std::size_t>& positions,
                      std::uint64_t pol) {
    Term t;
    std::uint64_t fixed_mask = 0, fixed_val = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
      std::size_t i = positions[j];
      bool positive = (pol >> j) & 1u;
      t.push_back(Literal(vars[i], positive));
      std::uint64_t bit = 1ull << (n - 1 - i);
      fixed_mask |= bit;
      if (positive) fixed_val |= bit;  // satisfy the term
    }
    for (const Term& a : accepted)
      if (lits_subset(a, t)) return;
    bool implicant = detail::for_each_in_subcube(
        n, fixed_mask, fixed_val,
        [&](std::uint64_t m) { return static_cast<bool>(tt[m]); });
    if (implicant) accepted.push_back(std::move(t));
  };

  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      for (std::uint64_t pol = 0; pol < (1ull << k); ++pol) consider(comb, pol);
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (k == 0 && !accepted.empty()) break;  // valid: empty term wins
  }
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

/// 1 iff every pair of sentences has an empty model intersection. Computed
/// as sum-of-counts vs. union-count over the shared variable set.
inline bool pairwise_disjoint_bf(const NnfStore& s, std::span<const NodeRef> roots,
                                 const OracleLimits& lim = {}) {
  std::vector<Var> over;
  for (NodeRef r : roots) over = union_vars(over, s.vars_of(r));
  detail::check_model_cap(over.size(), lim);
  std::size_t sum = 0;
  std::vector<std::uint64_t> all;
  for (NodeRef r : roots) {
    ModelSet ms = models_bf(s, r, over, lim);
    sum += ms.count();
    all.insert(all.end(), ms.models.begin(), ms.models.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all.size() == sum;
}

}  // namespace nnfkit
