/// @file  types.hpp
/// @brief Basic vocabulary: variables, literals, clause/term sets, errors.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nnfkit {

/// Propositional variable index, 1-based (DIMACS convention).
using Var = std::uint32_t;

/// Arbitrary-precision nonnegative integer for model counts.
using BigInt = boost::multiprecision::cpp_int;

/// Node handle into an NnfStore. Dense, 0-based.
using NodeRef = std::uint32_t;

// ---------------------------------------------------------------------------
// Errors

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A NodeRef or variable index that does not exist in the store.
class InvalidRefError : public Error {
public:
  using Error::Error;
};

/// An assignment that is not total over the variables it must cover.
class MissingVariableError : public Error {
public:
  using Error::Error;
};

/// Malformed input file. Carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Brute-force oracle invoked beyond its configured variable cap.
class CapExceededError : public Error {
public:
  using Error::Error;
};

/// (language, operation) pair not supported by the capability matrix,
/// or an operand that is definitely not in the declared language.
class CapabilityError : public Error {
public:
  using Error::Error;
};

/// Operation invoked with arguments violating its stated precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Literals, clauses, terms

/// A signed variable.
struct Literal {
  Var var = 0;
  bool positive = true;

  Literal() = default;
  Literal(Var v, bool pos) : var(v), positive(pos) {}

  /// Parse from a signed DIMACS integer (nonzero).
  static Literal from_dimacs(std::int64_t code) {
    return Literal(static_cast<Var>(code < 0 ? -code : code), code > 0);
  }
  std::int64_t to_dimacs() const {
    auto v = static_cast<std::int64_t>(var);
    return positive ? v : -v;
  }
  Literal negated() const { return Literal(var, !positive); }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.var == b.var && a.positive == b.positive;
  }
  friend bool operator<(const Literal& a, const Literal& b) {
    return a.var != b.var ? a.var < b.var : a.positive < b.positive;
  }
};

/// Duplicate-free literal set, sorted by (var, polarity).
/// Interpreted disjunctively as a clause, conjunctively as a term.
using LitSet = std::vector<Literal>;
using Clause = LitSet;
using Term = LitSet;

/// Sort and remove duplicates (not complementary pairs).
inline LitSet normalize_lits(LitSet lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

/// True iff the set contains both polarities of some variable.
/// For a clause this means valid; for a term, inconsistent.
inline bool has_complementary_pair(const LitSet& lits) {
  for (std::size_t i = 1; i < lits.size(); ++i)
    if (lits[i].var == lits[i - 1].var) return true;
  return false;
}

inline bool consistent_term(const Term& t) { return !has_complementary_pair(t); }
inline bool valid_clause(const Clause& c) { return has_complementary_pair(c); }

/// Subset test on normalized literal sets: a subsumes b (as a clause) iff a ⊆ b.
inline bool lits_subset(const LitSet& a, const LitSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Negate every literal: clause <-> term duality.
inline LitSet negate_lits(const LitSet& lits) {
  LitSet out;
  out.reserve(lits.size());
  for (const Literal& l : lits) out.push_back(l.negated());
  return out;
}

inline std::string lits_to_string(const LitSet& lits) {
  std::string s;
  for (const Literal& l : lits) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l.to_dimacs());
  }
  return s;
}

// ---------------------------------------------------------------------------
// Variable orders

/// Total order over variables 1..n as a permutation; position lookup in O(1).
class VarOrder {
public:
  VarOrder() = default;

  /// `perm[i]` is the i-th variable in the order. Must be a permutation of 1..n.
  explicit VarOrder(std::vector<Var> perm) : perm_(std::move(perm)) {
    pos_.assign(perm_.size() + 1, 0);
    std::vector<bool> seen(perm_.size() + 1, false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      Var v = perm_[i];
      if (v < 1 || v > perm_.size() || seen[v])
        throw PreconditionError("variable order is not a permutation of 1..n");
      seen[v] = true;
      pos_[v] = static_cast<Var>(i);
    }
  }

  static VarOrder identity(Var n) {
    std::vector<Var> perm(n);
    for (Var i = 0; i < n; ++i) perm[i] = i + 1;
    return VarOrder(std::move(perm));
  }

  std::size_t size() const { return perm_.size(); }
  Var at(std::size_t i) const { return perm_.at(i); }
  const std::vector<Var>& perm() const { return perm_; }

  /// Position of variable v in the order; v must be in 1..n.
  std::size_t position(Var v) const {
    if (v < 1 || v >= pos_.size()) throw InvalidRefError("variable outside order");
    return pos_[v];
  }
  bool precedes(Var a, Var b) const { return position(a) < position(b); }

  friend bool operator==(const VarOrder& a, const VarOrder& b) {
    return a.perm_ == b.perm_;
  }

private:
  std::vector<Var> perm_;
  std::vector<Var> pos_;
};

// ---------------------------------------------------------------------------
// Assignments and model sets

/// Total assignment over a sorted variable set, packed into a word.
/// Bit (n-1-i) holds the value of vars[i], so ascending mask order is
/// lexicographic order of the bit-strings.
struct Assignment {
  std::vector<Var> vars;  // sorted ascending, unique
  std::uint64_t mask = 0;

  bool value(Var v) const {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    if (it == vars.end() || *it != v)
      throw MissingVariableError("assignment does not cover variable " +
                                 std::to_string(v));
    auto i = static_cast<std::size_t>(it - vars.begin());
    return (mask >> (vars.size() - 1 - i)) & 1u;
  }

  std::string bits() const {
    std::string s(vars.size(), '0');
    for (std::size_t i = 0; i < vars.size(); ++i)
      if ((mask >> (vars.size() - 1 - i)) & 1u) s[i] = '1';
    return s;
  }
};

/// Explicit finite set of assignments over a declared variable set,
/// sorted lexicographically.
struct ModelSet {
  std::vector<Var> vars;            // sorted ascending, unique
  std::vector<std::uint64_t> models;  // sorted ascending, unique

  std::size_t count() const { return models.size(); }

  Assignment assignment(std::size_t i) const { return Assignment{vars, models[i]}; }

  friend bool operator==(const ModelSet& a, const ModelSet& b) {
    return a.vars == b.vars && a.models == b.models;
  }
};

/// Sorted union of two sorted variable vectors.
inline std::vector<Var> union_vars(const std::vector<Var>& a,
                                   const std::vector<Var>& b) {
  std::vector<Var> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace nnfkit
