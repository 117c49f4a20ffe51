/// @file  families.hpp
/// @brief Parameterized generators for the separation families and the
///        size-measurement harness behind the bench CLI.
///
/// Variable numbering is fixed per family so golden CSVs are stable:
///   parity/pairs:      x_i ↦ i+1 (0-based i)
///   equivalences:      x_i ↦ i+1, y_i ↦ n+i+1 (0-based i)
///   chandra-markowsky: p_i ↦ i (1-based), q_{i,j} ↦ k+(i-1)m+j, guard x last

#pragma once

#include "compile.hpp"

namespace nnfkit {

/// Nested odd-parity sentence over x_1..x_n, balanced-split sharing of
/// odd/even sub-sentences; smooth, deterministic, decomposable.
inline NodeRef gen_parity(NnfStore& s, unsigned n) {
  if (n < 1) throw PreconditionError("parity needs n >= 1");
  if (n > s.num_vars()) throw InvalidRefError("store universe too small");
  std::map<std::tuple<unsigned, unsigned, bool>, NodeRef> memo;
  auto rec = [&](auto&& self, unsigned lo, unsigned hi, bool odd) -> NodeRef {
    if (hi - lo == 1) return s.literal(lo, odd);
    auto key = std::make_tuple(lo, hi, odd);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    unsigned mid = lo + (hi - lo) / 2;
    NodeRef left_odd = self(self, lo, mid, true);
    NodeRef left_even = self(self, lo, mid, false);
    NodeRef right_odd = self(self, mid, hi, true);
    NodeRef right_even = self(self, mid, hi, false);
    NodeRef out =
        odd ? s.make_or({s.make_and({left_odd, right_even}),
                         s.make_and({left_even, right_odd})})
            : s.make_or({s.make_and({left_odd, right_odd}),
                         s.make_and({left_even, right_even})});
    memo.emplace(key, out);
    return out;
  };
  return rec(rec, 1, n + 1, true);
}

/// CNF of the odd-parity function: one full-width clause per even-parity
/// assignment (2^(n-1) clauses).
inline CnfFormula parity_cnf(unsigned n) {
  if (n < 1 || n > 24) throw PreconditionError("parity CNF needs 1 <= n <= 24");
  CnfFormula f;
  f.num_vars = n;
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    if (std::popcount(m) % 2 == 1) continue;  // keep odd-parity models
    Clause c;
    for (unsigned i = 0; i < n; ++i) {
      bool bit = (m >> (n - 1 - i)) & 1u;
      c.push_back(Literal(i + 1, !bit));
    }
    f.clauses.push_back(normalize_lits(std::move(c)));
    f.tautological.push_back(false);
  }
  return f;
}

/// Linear-size parity OBDD for the identity order: two nodes per level.
inline NodeRef gen_parity_obdd(NnfStore& s, unsigned n) {
  if (n < 1) throw PreconditionError("parity needs n >= 1");
  NodeRef odd = s.false_node(), even = s.true_node();
  for (Var v = n; v >= 1; --v) {
    NodeRef new_odd = make_decision(s, v, even, odd);
    NodeRef new_even = make_decision(s, v, odd, even);
    odd = new_odd;
    even = new_even;
  }
  return odd;
}

/// Σ_n = ∧_{i=0}^{n-1} (x_{2i} ∨ x_{2i+1}): n disjoint binary clauses over
/// 2n variables, already in prime implicates form; 3^n models, 2^n prime
/// implicants.
inline CnfFormula gen_pair_clauses(unsigned n) {
  if (n < 1) throw PreconditionError("pair clauses need n >= 1");
  CnfFormula f;
  f.num_vars = 2 * n;
  for (unsigned i = 0; i < n; ++i) {
    f.clauses.push_back({Literal(2 * i + 1, true), Literal(2 * i + 2, true)});
    f.tautological.push_back(false);
  }
  return f;
}

/// ∧_{i} (x_i ↔ y_i) as clauses (¬x_i ∨ y_i) ∧ (x_i ∨ ¬y_i); 2^n models
/// over 2n variables.
inline CnfFormula gen_equivalences(unsigned n) {
  if (n < 1) throw PreconditionError("equivalences need n >= 1");
  CnfFormula f;
  f.num_vars = 2 * n;
  for (unsigned i = 0; i < n; ++i) {
    Var x = i + 1, y = n + i + 1;
    f.clauses.push_back(normalize_lits({Literal(x, false), Literal(y, true)}));
    f.tautological.push_back(false);
    f.clauses.push_back(normalize_lits({Literal(x, true), Literal(y, false)}));
    f.tautological.push_back(false);
  }
  return f;
}

/// x_1 < y_1 < x_2 < y_2 < ... — polynomial OBDD size for the
/// equivalences family.
inline VarOrder interleaved_order(unsigned n) {
  std::vector<Var> perm;
  for (unsigned i = 0; i < n; ++i) {
    perm.push_back(i + 1);
    perm.push_back(n + i + 1);
  }
  return VarOrder(std::move(perm));
}

/// x_1 < ... < x_n < y_1 < ... < y_n — exponential OBDD size.
inline VarOrder blocked_order(unsigned n) {
  return VarOrder::identity(2 * n);
}

inline unsigned cm_num_vars(unsigned k, unsigned m) { return k + k * m + 1; }

struct ChandraMarkowsky {
  NodeRef sigma;        // guarded variant: (∨∨ x∧p_i∧q_ij) ∨ (¬x ∧ ∧¬p_i)
  NodeRef sigma_prime;  // (∨∨ p_i∧q_ij) ∨ ∧¬p_i — equivalent to ∃{x}.Σ
  Var guard;            // the variable x
};

/// The prime-implicant blowup pair: Σ has mk+1 terms and mk+1 prime
/// implicants; Σ' = ∃{x}.Σ has (m+1)^k + mk prime implicants.
inline ChandraMarkowsky gen_chandra_markowsky(NnfStore& s, unsigned k,
                                              unsigned m) {
  if (k < 1 || m < 1) throw PreconditionError("chandra-markowsky needs k,m >= 1");
  if (cm_num_vars(k, m) > s.num_vars())
    throw InvalidRefError("store universe too small");
  auto p = [&](unsigned i) { return static_cast<Var>(i); };           // 1..k
  auto q = [&](unsigned i, unsigned j) {
    return static_cast<Var>(k + (i - 1) * m + j);                     // 1..km
  };
  Var x = static_cast<Var>(k + k * m + 1);

  std::vector<NodeRef> prime_terms, guarded_terms;
  for (unsigned i = 1; i <= k; ++i)
    for (unsigned j = 1; j <= m; ++j) {
      prime_terms.push_back(
          s.make_and({s.literal(p(i), true), s.literal(q(i, j), true)}));
      guarded_terms.push_back(s.make_and({s.literal(x, true),
                                          s.literal(p(i), true),
                                          s.literal(q(i, j), true)}));
    }
  std::vector<NodeRef> neg_ps, neg_ps_guarded;
  for (unsigned i = 1; i <= k; ++i) neg_ps.push_back(s.literal(p(i), false));
  neg_ps_guarded = neg_ps;
  neg_ps_guarded.push_back(s.literal(x, false));
  prime_terms.push_back(k == 1 ? neg_ps[0] : s.make_and(neg_ps));
  guarded_terms.push_back(s.make_and(neg_ps_guarded));

  ChandraMarkowsky out;
  out.sigma = s.make_or(std::move(guarded_terms));
  out.sigma_prime = s.make_or(std::move(prime_terms));
  out.guard = x;
  return out;
}

/// ∧_{i=1}^{n} x_i: one model; its negation has 2^n - 1.
inline CnfFormula gen_all_ones(unsigned n) {
  if (n < 1) throw PreconditionError("all-ones needs n >= 1");
  CnfFormula f;
  f.num_vars = n;
  for (unsigned i = 1; i <= n; ++i) {
    f.clauses.push_back({Literal(i, true)});
    f.tautological.push_back(false);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Size report

struct SizeRow {
  std::string family;
  std::string params;
  std::string target;
  std::string metric;
  bool capped = false;
  BigInt value = 0;
};

struct BenchConfig {
  std::string family;                // parity | pairs | equiv | cm
  unsigned lo = 2, hi = 4;           // inclusive parameter range (n, or k)
  unsigned m = 2;                    // second parameter for cm
  std::vector<std::string> targets;  // empty = all defaults for the family
  OracleLimits limits{};
};

namespace detail {
inline bool wants(const BenchConfig& cfg, const std::string& target) {
  if (cfg.targets.empty()) return true;
  return std::find(cfg.targets.begin(), cfg.targets.end(), target) !=
         cfg.targets.end();
}

template <typename F>
inline void report_cell(std::vector<SizeRow>& rows, const BenchConfig& cfg,
                        const std::string& params, const std::string& target,
                        const std::string& metric, F&& compute) {
  if (!wants(cfg, target)) return;
  SizeRow row{cfg.family, params, target, metric, false, 0};
  try {
    row.value = compute();
  } catch (const CapExceededError&) {
    row.capped = true;
  }
  rows.push_back(std::move(row));
}
}  // namespace detail

/// Compile each instance to each requested target and record size metrics:
/// DAG edges for NNF targets, node count for OBDDs, term/clause counts for
/// the flat targets. Cap overruns become "cap-exceeded" cells, never aborts.
inline std::vector<SizeRow> run_size_report(const BenchConfig& cfg) {
  std::vector<SizeRow> rows;
  auto cell = [&](const std::string& params, const std::string& target,
                  const std::string& metric, auto&& compute) {
    detail::report_cell(rows, cfg, params, target, metric, compute);
  };
  if (cfg.family == "parity") {
    for (unsigned n = cfg.lo; n <= cfg.hi; ++n) {
      std::string params = "n=" + std::to_string(n);
      cell(params, "obdd", "nodes", [&] {
        NnfStore s(n);
        return BigInt(bdd_node_count(s, gen_parity_obdd(s, n)));
      });
      cell(params, "ddnnf", "edges", [&] {
        NnfStore s(n);
        return BigInt(s.size(gen_parity(s, n)));
      });
      cell(params, "dnf", "terms", [&] {
        NnfStore s(n);
        NodeRef mods = compile_mods(s, parity_cnf(n), cfg.limits);
        return BigInt(term_view(s, mods)->size());
      });
      cell(params, "mods", "terms", [&] {
        NnfStore s(n);
        NodeRef mods = compile_mods(s, parity_cnf(n), cfg.limits);
        return BigInt(term_view(s, mods)->size());
      });
      cell(params, "ip", "terms", [&] {
        return BigInt(ip_terms(parity_cnf(n), cfg.limits).size());
      });
      cell(params, "pi", "clauses", [&] {
        return BigInt(pi_clauses(parity_cnf(n), cfg.limits).size());
      });
    }
  } else if (cfg.family == "pairs") {
    for (unsigned n = cfg.lo; n <= cfg.hi; ++n) {
      std::string params = "n=" + std::to_string(n);
      CnfFormula f = gen_pair_clauses(n);
      cell(params, "pi", "clauses",
           [&] { return BigInt(pi_clauses(f, cfg.limits).size()); });
      cell(params, "ip", "terms",
           [&] { return BigInt(ip_terms(f, cfg.limits).size()); });
      cell(params, "mods", "terms", [&] {
        NnfStore s(f.num_vars);
        return BigInt(term_view(s, compile_mods(s, f, cfg.limits))->size());
      });
      cell(params, "obdd", "nodes", [&] {
        NnfStore s(f.num_vars);
        return BigInt(bdd_node_count(
            s, compile_obdd(s, f, VarOrder::identity(f.num_vars))));
      });
      cell(params, "ddnnf", "edges", [&] {
        NnfStore s(f.num_vars);
        return BigInt(s.size(compile_ddnnf(s, f)));
      });
    }
  } else if (cfg.family == "equiv") {
    for (unsigned n = cfg.lo; n <= cfg.hi; ++n) {
      std::string params = "n=" + std::to_string(n);
      CnfFormula f = gen_equivalences(n);
      cell(params, "obdd_interleaved", "nodes", [&] {
        NnfStore s(f.num_vars);
        return BigInt(bdd_node_count(s, compile_obdd(s, f, interleaved_order(n))));
      });
      cell(params, "obdd_blocked", "nodes", [&] {
        NnfStore s(f.num_vars);
        return BigInt(bdd_node_count(s, compile_obdd(s, f, blocked_order(n))));
      });
      cell(params, "ddnnf", "edges", [&] {
        NnfStore s(f.num_vars);
        return BigInt(s.size(compile_ddnnf(s, f)));
      });
    }
  } else if (cfg.family == "cm") {
    for (unsigned k = cfg.lo; k <= cfg.hi; ++k) {
      std::string params = "k=" + std::to_string(k) + ";m=" + std::to_string(cfg.m);
      cell(params, "ip", "terms", [&] {
        NnfStore s(cm_num_vars(k, cfg.m));
        auto cm = gen_chandra_markowsky(s, k, cfg.m);
        return BigInt(prime_implicants_bf(s, cm.sigma_prime, cfg.limits).size());
      });
      cell(params, "dnf", "terms", [&] {
        NnfStore s(cm_num_vars(k, cfg.m));
        auto cm = gen_chandra_markowsky(s, k, cfg.m);
        return BigInt(term_view(s, cm.sigma)->size());
      });
    }
  } else {
    throw PreconditionError("unknown family " + cfg.family);
  }
  return rows;
}

inline void write_report_csv(const std::vector<SizeRow>& rows,
                             std::ostream& out) {
  out << "family,params,target,metric,value\n";
  for (const SizeRow& r : rows) {
    out << r.family << ',' << r.params << ',' << r.target << ',' << r.metric
        << ',';
    if (r.capped) out << "cap-exceeded";
    else out << r.value;
    out << '\n';
  }
}

}  // namespace nnfkit
