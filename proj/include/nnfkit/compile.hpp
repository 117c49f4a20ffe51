/// @file  compile.hpp
/// @brief Compilers from CNF into the tractable targets: d-DNNF (and
///        sd-DNNF), OBDD for a fixed order, MODS, PI and IP.

#pragma once

#include "io.hpp"
#include "oracle.hpp"
#include "queries.hpp"

namespace nnfkit {

namespace detail {

inline std::vector<Clause> normalized_clauses(const CnfFormula& f) {
  std::vector<Clause> out;
  out.reserve(f.clauses.size());
  for (const Clause& c : f.clauses) out.push_back(normalize_lits(c));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string clause_set_key(const std::vector<Clause>& clauses) {
  std::string key;
  for (const Clause& c : clauses) {
    for (const Literal& l : c) {
      auto code = static_cast<std::int32_t>(l.to_dimacs());
      key.append(reinterpret_cast<const char*>(&code), sizeof(code));
    }
    std::int32_t sep = 0;
    key.append(reinterpret_cast<const char*>(&sep), sizeof(sep));
  }
  return key;
}

/// Unit-free conditioning of a clause set on one literal.
inline std::vector<Clause> assign(const std::vector<Clause>& clauses, Literal l) {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (const Clause& c : clauses) {
    if (std::binary_search(c.begin(), c.end(), l)) continue;  // satisfied
    Clause residual;
    for (const Literal& x : c)
      if (x.var != l.var) residual.push_back(x);
    out.push_back(std::move(residual));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Partition clauses into variable-disjoint components, ordered by their
/// smallest variable.
inline std::vector<std::vector<Clause>> components(
    const std::vector<Clause>& clauses) {
  std::unordered_map<Var, Var> parent;
  std::function<Var(Var)> find = [&](Var v) {
    auto it = parent.find(v);
    if (it == parent.end() || it->second == v) {
      parent[v] = v;
      return v;
    }
    return parent[v] = find(it->second);
  };
  for (const Clause& c : clauses)
    for (std::size_t i = 1; i < c.size(); ++i)
      parent[find(c[0].var)] = find(c[i].var);
  std::map<Var, std::vector<Clause>> groups;
  for (const Clause& c : clauses) groups[find(c[0].var)].push_back(c);
  std::vector<std::vector<Clause>> out;
  for (auto& [root, group] : groups) {
    std::sort(group.begin(), group.end());
    out.push_back(std::move(group));
  }
  return out;
}

inline Var most_frequent_var(const std::vector<Clause>& clauses) {
  std::map<Var, std::size_t> freq;
  for (const Clause& c : clauses)
    for (const Literal& l : c) ++freq[l.var];
  Var best = 0;
  std::size_t best_count = 0;
  for (auto [v, n] : freq)
    if (n > best_count) { best = v; best_count = n; }
  return best;  // ties resolve to the lowest index via map order
}

}  // namespace detail

/// Exhaustive Shannon-expansion compiler with connected-component
/// decomposition and component caching. Output is decomposable and has
/// decision-shaped disjunctions, so it classifies d-DNNF structurally.
/// Inconsistent input compiles to false.
inline NodeRef compile_ddnnf(NnfStore& s, const CnfFormula& f) {
  if (f.num_vars > s.num_vars())
    throw InvalidRefError("store universe smaller than formula universe");
  std::unordered_map<std::string, NodeRef> cache;
  auto rec = [&](auto&& self, std::vector<Clause> clauses) -> NodeRef {
    for (const Clause& c : clauses)
      if (c.empty()) return s.false_node();
    if (clauses.empty()) return s.true_node();
    std::string key = detail::clause_set_key(clauses);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    NodeRef result;
    auto groups = detail::components(clauses);
    if (groups.size() > 1) {
      std::vector<NodeRef> parts;
      parts.reserve(groups.size());
      for (auto& g : groups) parts.push_back(self(self, std::move(g)));
      result = s.make_and(std::move(parts));
    } else {
      Var v = detail::most_frequent_var(clauses);
      NodeRef hi = self(self, detail::assign(clauses, Literal(v, true)));
      NodeRef lo = self(self, detail::assign(clauses, Literal(v, false)));
      result = s.make_or({s.make_and({s.literal(v, true), hi}),
                          s.make_and({s.literal(v, false), lo})});
    }
    cache.emplace(std::move(key), result);
    return result;
  };
  return rec(rec, detail::normalized_clauses(f));
}

/// d-DNNF compilation followed by smoothing; output classifies sd-DNNF.
inline NodeRef compile_sddnnf(NnfStore& s, const CnfFormula& f) {
  return smooth(s, compile_ddnnf(s, f));
}

/// Fold the clause OBDDs with apply along the given order. Deterministic in
/// (formula, order); the result is reduced and canonical.
inline NodeRef compile_obdd(NnfStore& s, const CnfFormula& f,
                            const VarOrder& order) {
  if (f.num_vars > s.num_vars())
    throw InvalidRefError("store universe smaller than formula universe");
  if (order.size() < f.num_vars)
    throw PreconditionError("variable order must cover the formula universe");
  NodeRef acc = s.true_node();
  for (const Clause& c : f.clauses) {
    NodeRef cb = clause_to_obdd(s, normalize_lits(c), order);
    acc = obdd_apply(s, acc, cb, true, order);
  }
  return acc;
}

/// One full term per model over the declared universe (models shape).
inline NodeRef compile_mods(NnfStore& s, const CnfFormula& f,
                            const OracleLimits& lim = {}) {
  if (f.num_vars > s.num_vars())
    throw InvalidRefError("store universe smaller than formula universe");
  std::vector<Var> over;
  for (Var v = 1; v <= f.num_vars; ++v) over.push_back(v);
  NodeRef cnf = cnf_to_sentence(s, f);
  ModelSet ms = models_bf(s, cnf, over, lim);
  std::vector<NodeRef> terms;
  terms.reserve(ms.count());
  for (std::uint64_t m : ms.models) {
    std::vector<NodeRef> lits;
    lits.reserve(over.size());
    for (std::size_t i = 0; i < over.size(); ++i) {
      bool bit = (m >> (over.size() - 1 - i)) & 1u;
      lits.push_back(s.literal(over[i], bit));
    }
    terms.push_back(lits.empty() ? s.true_node() : s.make_and(std::move(lits)));
  }
  if (terms.empty()) return s.false_node();
  if (terms.size() == 1) return terms[0];
  return s.make_or(std::move(terms));
}

/// Prime implicates by resolution closure with subsumption elimination.
inline std::vector<Clause> pi_clauses(const CnfFormula& f,
                                      const OracleLimits& lim = {}) {
  if (f.num_vars > lim.clause_cap)
    throw CapExceededError("prime implicate closure capped at " +
                           std::to_string(lim.clause_cap) + " variables, got " +
                           std::to_string(f.num_vars));
  std::vector<LitSet> set;
  for (const Clause& c : f.clauses) {
    Clause n = normalize_lits(c);
    if (!valid_clause(n)) set.push_back(std::move(n));
  }
  if (set.size() != f.clauses.size() && f.clauses.empty()) set.clear();
  set = minimize_under_subsumption(std::move(set));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Clause> added;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        // find the variables clashing between the two clauses
        Var clash = 0;
        int clashes = 0;
        for (const Literal& l : set[i])
          if (std::binary_search(set[j].begin(), set[j].end(), l.negated())) {
            clash = l.var;
            if (++clashes > 1) break;
          }
        if (clashes != 1) continue;  // 0: no resolvent; >1: tautological
        Clause res;
        for (const Literal& l : set[i])
          if (l.var != clash) res.push_back(l);
        for (const Literal& l : set[j])
          if (l.var != clash) res.push_back(l);
        res = normalize_lits(std::move(res));
        if (valid_clause(res)) continue;
        bool subsumed = false;
        for (const Clause& k : set)
          if (lits_subset(k, res)) { subsumed = true; break; }
        for (const Clause& k : added)
          if (!subsumed && lits_subset(k, res)) subsumed = true;
        if (!subsumed) added.push_back(std::move(res));
      }
    }
    if (!added.empty()) {
      changed = true;
      set.insert(set.end(), added.begin(), added.end());
      set = minimize_under_subsumption(std::move(set));
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

/// Prime implicants via merge closure from the models (Quine–McCluskey
/// style), which is complete from a models base.
inline std::vector<Term> ip_terms(const CnfFormula& f,
                                  const OracleLimits& lim = {}) {
  if (f.num_vars > lim.clause_cap)
    throw CapExceededError("prime implicant closure capped at " +
                           std::to_string(lim.clause_cap) + " variables, got " +
                           std::to_string(f.num_vars));
  std::vector<Var> occ;
  for (const Clause& c : f.clauses)
    for (const Literal& l : c) occ.push_back(l.var);
  std::sort(occ.begin(), occ.end());
  occ.erase(std::unique(occ.begin(), occ.end()), occ.end());

  NnfStore tmp(f.num_vars);
  NodeRef cnf = cnf_to_sentence(tmp, f);
  ModelSet ms = models_bf(tmp, cnf, occ, lim);

  std::vector<Term> cubes;
  for (std::uint64_t m : ms.models) {
    Term t;
    for (std::size_t i = 0; i < occ.size(); ++i)
      t.push_back(Literal(occ[i], (m >> (occ.size() - 1 - i)) & 1u));
    cubes.push_back(std::move(t));
  }
  std::vector<Term> primes;
  while (!cubes.empty()) {
    std::sort(cubes.begin(), cubes.end());
    cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
    std::vector<bool> merged(cubes.size(), false);
    std::vector<Term> next;
    for (std::size_t i = 0; i < cubes.size(); ++i) {
      for (std::size_t j = i + 1; j < cubes.size(); ++j) {
        if (cubes[i].size() != cubes[j].size()) continue;
        // same variable set, exactly one differing polarity
        std::size_t diff = 0;
        Var diff_var = 0;
        bool same_vars = true;
        for (std::size_t k = 0; k < cubes[i].size(); ++k) {
          if (cubes[i][k].var != cubes[j][k].var) { same_vars = false; break; }
          if (cubes[i][k].positive != cubes[j][k].positive) {
            ++diff;
            diff_var = cubes[i][k].var;
          }
        }
        if (!same_vars || diff != 1) continue;
        merged[i] = merged[j] = true;
        Term t;
        for (const Literal& l : cubes[i])
          if (l.var != diff_var) t.push_back(l);
        next.push_back(std::move(t));
      }
    }
    for (std::size_t i = 0; i < cubes.size(); ++i)
      if (!merged[i]) primes.push_back(cubes[i]);
    cubes = std::move(next);
  }
  return minimize_under_subsumption(std::move(primes));
}

/// Canonical prime-implicates sentence.
inline NodeRef compile_pi(NnfStore& s, const CnfFormula& f,
                          const OracleLimits& lim = {}) {
  if (f.num_vars > s.num_vars())
    throw InvalidRefError("store universe smaller than formula universe");
  return clauses_to_sentence(s, pi_clauses(f, lim));
}

/// Canonical prime-implicants sentence.
inline NodeRef compile_ip(NnfStore& s, const CnfFormula& f,
                          const OracleLimits& lim = {}) {
  if (f.num_vars > s.num_vars())
    throw InvalidRefError("store universe smaller than formula universe");
  return terms_to_sentence(s, ip_terms(f, lim));
}

}  // namespace nnfkit
