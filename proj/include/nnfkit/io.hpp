/// @file  io.hpp
/// @brief .nnf sentence serialization and DIMACS CNF parsing.
///
/// .nnf text format:
///   line 1:  nnf <node-count> <edge-count> <num-vars>
///   then one line per node, 0-based ids in file order:
///     L <signed-int>                literal (negative = negated variable)
///     A <k> <id_1> ... <id_k>       conjunction; `A 0` is true
///     O <j> <k> <id_1> ... <id_k>   disjunction; j = decision variable or 0;
///                                   `O 0 0` is false
///   Children ids must be strictly smaller than the node's own line index.
///   The last node is the root.

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "decision.hpp"
#include "store.hpp"

namespace nnfkit {

// ---------------------------------------------------------------------------
// .nnf

inline void write_nnf(const NnfStore& s, NodeRef root, std::ostream& out) {
  std::vector<NodeRef> order = s.reachable(root);
  std::unordered_map<NodeRef, std::size_t> file_id;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    file_id[order[i]] = i;
    edges += s.node(order[i]).children.size();
  }
  out << "nnf " << order.size() << ' ' << edges << ' ' << s.num_vars() << '\n';
  for (NodeRef r : order) {
    const Node& n = s.node(r);
    switch (n.kind) {
      case NodeKind::True:
        out << "A 0\n";
        break;
      case NodeKind::False:
        out << "O 0 0\n";
        break;
      case NodeKind::Lit:
        out << "L " << n.lit.to_dimacs() << '\n';
        break;
      case NodeKind::And: {
        out << "A " << n.children.size();
        for (NodeRef c : n.children) out << ' ' << file_id[c];
        out << '\n';
        break;
      }
      case NodeKind::Or: {
        auto guard = complementary_guard(s, r);
        out << "O " << (guard ? *guard : 0) << ' ' << n.children.size();
        for (NodeRef c : n.children) out << ' ' << file_id[c];
        out << '\n';
        break;
      }
    }
  }
}

inline std::string write_nnf_string(const NnfStore& s, NodeRef root) {
  std::ostringstream os;
  write_nnf(s, root, os);
  return os.str();
}

/// Parse a .nnf file into `store`; returns the root (last node).
/// The store's declared universe must cover the file's.
inline NodeRef read_nnf(std::istream& in, NnfStore& store) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty input, expected nnf header", 1);
  std::istringstream hs(line);
  std::string tag;
  std::size_t node_count = 0, edge_count = 0;
  std::int64_t nv = -1;
  if (!(hs >> tag >> node_count >> edge_count >> nv) || tag != "nnf" || nv < 0)
    throw ParseError("malformed header, expected `nnf <nodes> <edges> <vars>`",
                     lineno);
  {
    std::string rest;
    if (hs >> rest) throw ParseError("trailing tokens after header", lineno);
  }
  if (static_cast<Var>(nv) > store.num_vars())
    throw ParseError("file declares " + std::to_string(nv) +
                         " variables, store declares " +
                         std::to_string(store.num_vars()),
                     lineno);
  if (node_count == 0) throw ParseError("node count must be at least 1", lineno);

  std::vector<NodeRef> by_file_id;
  by_file_id.reserve(node_count);
  std::size_t edges_seen = 0;

  for (std::size_t i = 0; i < node_count; ++i) {
    if (!next_line())
      throw ParseError("expected " + std::to_string(node_count) +
                           " node lines, got " + std::to_string(i),
                       lineno + 1);
    std::istringstream ls(line);
    char k = 0;
    if (!(ls >> k)) throw ParseError("empty node line", lineno);
    auto read_children = [&](std::size_t n_children) {
      std::vector<NodeRef> kids;
      kids.reserve(n_children);
      for (std::size_t j = 0; j < n_children; ++j) {
        std::int64_t id = -1;
        if (!(ls >> id)) throw ParseError("missing child id", lineno);
        if (id < 0 || static_cast<std::size_t>(id) >= i)
          throw ParseError("child id " + std::to_string(id) +
                               " must be smaller than node index " +
                               std::to_string(i),
                           lineno);
        kids.push_back(by_file_id[static_cast<std::size_t>(id)]);
      }
      edges_seen += n_children;
      return kids;
    };
    NodeRef r = 0;
    if (k == 'L') {
      std::int64_t code = 0;
      if (!(ls >> code) || code == 0)
        throw ParseError("literal line needs a nonzero signed integer", lineno);
      Literal lit = Literal::from_dimacs(code);
      if (lit.var > static_cast<Var>(nv))
        throw ParseError("variable " + std::to_string(lit.var) +
                             " exceeds declared count " + std::to_string(nv),
                         lineno);
      r = store.literal(lit);
    } else if (k == 'A') {
      std::int64_t cnt = -1;
      if (!(ls >> cnt) || cnt < 0) throw ParseError("bad child count", lineno);
      auto kids = read_children(static_cast<std::size_t>(cnt));
      r = kids.empty() ? store.true_node() : store.make_and(std::move(kids));
    } else if (k == 'O') {
      std::int64_t dvar = -1, cnt = -1;
      if (!(ls >> dvar >> cnt) || dvar < 0 || cnt < 0)
        throw ParseError("or line needs `O <dvar> <count> ...`", lineno);
      if (dvar > nv)
        throw ParseError("decision variable exceeds declared count", lineno);
      auto kids = read_children(static_cast<std::size_t>(cnt));
      r = kids.empty() ? store.false_node() : store.make_or(std::move(kids));
    } else {
      throw ParseError(std::string("unknown node kind `") + k + "`", lineno);
    }
    {
      std::string rest;
      if (ls >> rest) throw ParseError("trailing tokens on node line", lineno);
    }
    by_file_id.push_back(r);
  }
  if (edges_seen != edge_count)
    throw ParseError("header declares " + std::to_string(edge_count) +
                         " edges, file has " + std::to_string(edges_seen),
                     lineno);
  if (next_line()) throw ParseError("trailing content after last node", lineno);
  return by_file_id.back();
}

inline NodeRef read_nnf_string(const std::string& text, NnfStore& store) {
  std::istringstream is(text);
  return read_nnf(is, store);
}

// ---------------------------------------------------------------------------
// DIMACS CNF

struct CnfFormula {
  Var num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<bool> tautological;  // parallel flag: clause has x and ¬x

  std::size_t clause_count() const { return clauses.size(); }
};

/// Parse standard DIMACS: `c` comments, `p cnf V C` header, 0-terminated
/// clauses. Duplicate literals within a clause are merged; tautological
/// clauses are retained and flagged.
inline CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  LitSet current;
  bool in_clause = false;
  bool done = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == '%') { done = true; continue; }
    std::istringstream ls(line);
    if (!have_header) {
      std::string p, kind;
      std::int64_t v = -1, c = -1;
      if (!(ls >> p))continue;
      if (p != "p")
        throw ParseError("expected `p cnf <vars> <clauses>` header before "
                         "clauses", lineno);
      if (!(ls >> kind >> v >> c) || kind != "cnf" || v < 0 || c < 0)
        throw ParseError("malformed problem line", lineno);
      f.num_vars = static_cast<Var>(v);
      declared_clauses = static_cast<std::size_t>(c);
      have_header = true;
      continue;
    }
    std::int64_t tok;
    while (ls >> tok) {
      if (done)
        throw ParseError("literals after `%` terminator", lineno);
      if (tok == 0) {
        if (f.clauses.size() == declared_clauses)
          throw ParseError("more clauses than the " +
                               std::to_string(declared_clauses) +
                               " declared in the header",
                           lineno);
        LitSet cl = normalize_lits(std::move(current));
        f.tautological.push_back(has_complementary_pair(cl));
        f.clauses.push_back(std::move(cl));
        current.clear();
        in_clause = false;
        continue;
      }
      Var v = static_cast<Var>(tok < 0 ? -tok : tok);
      if (v > f.num_vars)
        throw ParseError("literal " + std::to_string(tok) +
                             " out of range, header declares " +
                             std::to_string(f.num_vars) + " variables",
                         lineno);
      current.push_back(Literal::from_dimacs(tok));
      in_clause = true;
    }
    if (!ls.eof()) throw ParseError("non-integer token in clause data", lineno);
  }
  if (!have_header) throw ParseError("missing `p cnf` header", lineno ? lineno : 1);
  if (in_clause)
    throw ParseError("unterminated clause (missing trailing 0)", lineno);
  if (f.clauses.size() != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                         " clauses, file has " + std::to_string(f.clauses.size()),
                     lineno);
  return f;
}

inline CnfFormula parse_dimacs_string(const std::string& text) {
  std::istringstream is(text);
  return parse_dimacs(is);
}

inline void write_dimacs(const CnfFormula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

/// Build the And-of-Or-clauses sentence for a CNF. A single clause stays
/// bare; an empty clause set is the true node; an empty clause is false.
inline NodeRef cnf_to_sentence(NnfStore& s, const CnfFormula& f) {
  if (f.num_vars > s.num_vars())
    throw InvalidRefError("store universe smaller than formula universe");
  std::vector<NodeRef> clause_nodes;
  clause_nodes.reserve(f.clauses.size());
  for (const Clause& c : f.clauses) {
    if (c.empty()) {
      clause_nodes.push_back(s.false_node());
    } else if (c.size() == 1) {
      clause_nodes.push_back(s.literal(c[0]));
    } else {
      std::vector<NodeRef> lits;
      lits.reserve(c.size());
      for (const Literal& l : c) lits.push_back(s.literal(l));
      clause_nodes.push_back(s.make_or(std::move(lits)));
    }
  }
  if (clause_nodes.empty()) return s.true_node();
  if (clause_nodes.size() == 1) return clause_nodes[0];
  return s.make_and(std::move(clause_nodes));
}

}  // namespace nnfkit
