#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace nnfkit;
using namespace testutil;

TEST_CASE("canonical constructors") {
  NnfStore s(4);

  SECTION("empty conjunction is the true node, empty disjunction false") {
    CHECK(s.make_and({}) == s.true_node());
    CHECK(s.make_or({}) == s.false_node());
  }

  SECTION("children are deduplicated") {
    NodeRef a = s.literal(1, true);
    NodeRef o = s.make_or({a, a});
    CHECK(s.node(o).children.size() == 1);
  }

  SECTION("hash-consing returns the same id for identical structure") {
    CHECK(s.literal(1, true) == s.literal(1, true));
    NodeRef x = s.literal(1, true), y = s.literal(2, true);
    CHECK(s.make_and({x, y}) == s.make_and({y, x}));
  }

  SECTION("no flattening, no constant propagation") {
    NodeRef x = s.literal(1, true);
    NodeRef inner = s.make_and({x, s.literal(2, true)});
    NodeRef outer = s.make_and({inner, s.literal(3, true)});
    CHECK(s.node(outer).children.size() == 2);
    NodeRef with_const = s.make_and({x, s.true_node()});
    CHECK(s.node(with_const).children.size() == 2);
  }

  SECTION("child ids are strictly smaller than the parent id") {
    std::mt19937 rng(7);
    NodeRef root = random_dag(s, rng, 4, 40);
    (void)root;
    for (NodeRef r = 0; r < s.node_count(); ++r)
      for (NodeRef c : s.node(r).children) CHECK(c < r);
  }

  SECTION("out-of-range children are rejected") {
    CHECK_THROWS_AS(s.make_and({static_cast<NodeRef>(10000)}), InvalidRefError);
    CHECK_THROWS_AS(s.literal(9, true), InvalidRefError);
  }
}

TEST_CASE("vars, size, height") {
  NnfStore s(4);
  SECTION("leaves") {
    CHECK(s.vars_of(s.literal(3, false)) == std::vector<Var>{3});
    CHECK(s.vars_of(s.true_node()).empty());
    NodeRef leaf = s.literal(1, true);
    CHECK(s.size(leaf) == 0);
    CHECK(s.height(leaf) == 0);
  }
  SECTION("union over leaves") {
    NodeRef inner = s.make_or({s.literal(2, true), s.literal(1, false)});
    NodeRef root = s.make_and({s.literal(1, true), inner});
    CHECK(s.vars_of(root) == std::vector<Var>({1, 2}));
  }
  SECTION("two-leaf conjunction") {
    NodeRef root = s.make_and({s.literal(1, true), s.literal(2, true)});
    CHECK(s.size(root) == 2);
    CHECK(s.height(root) == 1);
  }
  SECTION("the 4-variable parity DAG is nested") {
    NnfStore p(4);
    NodeRef parity = gen_parity(p, 4);
    CHECK(p.height(parity) > 2);
  }
}

TEST_CASE("evaluate") {
  NnfStore s(4);
  SECTION("constants") {
    Assignment a{{1}, 0};
    CHECK(s.evaluate(s.true_node(), a));
    CHECK_FALSE(s.evaluate(s.false_node(), a));
  }
  SECTION("odd parity assignment") {
    NodeRef parity = gen_parity(s, 4);
    // A=1, B=0, C=0, D=0
    Assignment a{{1, 2, 3, 4}, 0b1000};
    CHECK(s.evaluate(parity, a));
    Assignment b{{1, 2, 3, 4}, 0b1100};
    CHECK_FALSE(s.evaluate(parity, b));
  }
  SECTION("contradiction") {
    NodeRef c = s.make_and({s.literal(1, true), s.literal(1, false)});
    CHECK_FALSE(s.evaluate(c, Assignment{{1}, 1}));
  }
  SECTION("partial assignment errors") {
    NodeRef x = s.literal(2, true);
    CHECK_THROWS_AS(s.evaluate(x, Assignment{{1}, 1}), MissingVariableError);
  }
}

TEST_CASE("evaluate agrees with a memoless reference on random trees") {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    NnfStore s(10);
    NodeRef root = random_tree(s, rng, 10, 5);
    std::vector<Var> over = universe(10);
    std::uint64_t mask = rng() & 0x3ff;
    Assignment a{over, mask};
    CHECK(s.evaluate(root, a) == eval_nocache(s, root, a));
  }
}

TEST_CASE("size and height agree with independent counters") {
  std::mt19937 rng(13);
  for (int i = 0; i < 300; ++i) {
    NnfStore s(10);
    NodeRef root = random_dag(s, rng, 10, 60);
    CHECK(s.size(root) == count_edges_independent(s, root));
    CHECK(s.height(root) == height_independent(s, root));
  }
}

TEST_CASE("hash-consing soundness: equal roots are equivalent") {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    NnfStore s(6);
    std::mt19937 rng_a(1000 + i), rng_b(1000 + i);
    NodeRef a = random_dag(s, rng_a, 6, 30);
    NodeRef b = random_dag(s, rng_b, 6, 30);
    REQUIRE(a == b);
    CHECK(equivalent_bf(s, a, b));
  }
}

TEST_CASE("simplify propagates constants without touching the original") {
  NnfStore s(3);
  NodeRef x = s.literal(1, true), y = s.literal(2, true);
  SECTION("drop true from conjunctions") {
    NodeRef n = s.make_and({x, s.true_node(), y});
    NodeRef simp = s.simplify(n);
    CHECK(simp == s.make_and({x, y}));
    CHECK(s.node(n).children.size() == 3);  // original untouched
  }
  SECTION("short-circuit false") {
    CHECK(s.simplify(s.make_and({x, s.false_node()})) == s.false_node());
    CHECK(s.simplify(s.make_or({x, s.true_node()})) == s.true_node());
  }
  SECTION("single-child collapse") {
    CHECK(s.simplify(s.make_or({x, s.false_node()})) == x);
  }
}

TEST_CASE("nnf serialization") {
  SECTION("single literal format is bit-exact") {
    NnfStore s(3);
    NodeRef lit = s.literal(2, true);
    CHECK(write_nnf_string(s, lit) == "nnf 1 0 3\nL 2\n");
  }
  SECTION("round-trip is the identity on canonical ids") {
    NnfStore s(4);
    NodeRef parity = gen_parity(s, 4);
    std::string text = write_nnf_string(s, parity);
    NnfStore fresh(4);
    NodeRef back = read_nnf_string(text, fresh);
    CHECK(fresh.size(back) == s.size(parity));
    CHECK(equivalent_bf(fresh, back, s, parity));
    CHECK(write_nnf_string(fresh, back) == text);
  }
  SECTION("round-trip on a random corpus") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
      NnfStore s(8);
      NodeRef root = random_dag(s, rng, 8, 50);
      std::string text = write_nnf_string(s, root);
      NnfStore fresh(8);
      NodeRef back = read_nnf_string(text, fresh);
      CHECK(write_nnf_string(fresh, back) == text);
    }
  }
  SECTION("forward references are rejected") {
    NnfStore s(2);
    CHECK_THROWS_AS(read_nnf_string("nnf 2 1 2\nA 1 1\nL 1\n", s), ParseError);
  }
  SECTION("oversized variable index is rejected") {
    NnfStore s(9);
    CHECK_THROWS_AS(read_nnf_string("nnf 1 0 2\nL 9\n", s), ParseError);
  }
  SECTION("edge count mismatch is rejected") {
    NnfStore s(2);
    CHECK_THROWS_AS(read_nnf_string("nnf 3 1 2\nL 1\nL 2\nA 2 0 1\n", s),
                    ParseError);
  }
  SECTION("constants") {
    NnfStore s(1);
    CHECK(write_nnf_string(s, s.true_node()) == "nnf 1 0 1\nA 0\n");
    CHECK(write_nnf_string(s, s.false_node()) == "nnf 1 0 1\nO 0 0\n");
    NnfStore fresh(1);
    CHECK(read_nnf_string("nnf 1 0 1\nA 0\n", fresh) == fresh.true_node());
    CHECK(read_nnf_string("nnf 1 0 1\nO 0 0\n", fresh) == fresh.false_node());
  }
  SECTION("decision or-nodes carry their variable") {
    NnfStore s(2);
    NodeRef d = make_decision(s, 1, s.true_node(), s.false_node());
    std::string text = write_nnf_string(s, d);
    CHECK(text.find("O 1 2") != std::string::npos);
  }
}

TEST_CASE("dimacs parsing") {
  SECTION("basic clause") {
    CnfFormula f = parse_dimacs_string("p cnf 2 1\n1 -2 0\n");
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.num_vars == 2);
    CHECK(f.clauses[0] == Clause({Literal(1, true), Literal(2, false)}));
    CHECK_FALSE(f.tautological[0]);
  }
  SECTION("duplicate literals merge") {
    CnfFormula f = parse_dimacs_string("p cnf 1 1\n1 1 0\n");
    CHECK(f.clauses[0] == Clause({Literal(1, true)}));
  }
  SECTION("tautological clause retained and flagged") {
    CnfFormula f = parse_dimacs_string("p cnf 1 1\n1 -1 0\n");
    CHECK(f.clauses.size() == 1);
    CHECK(f.tautological[0]);
  }
  SECTION("range error") {
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 1 1\n2 0\n"), ParseError);
  }
  SECTION("comments and multi-line clauses") {
    CnfFormula f = parse_dimacs_string("c hello\np cnf 3 2\n1 2\n3 0\n-1 0\n");
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0].size() == 3);
  }
  SECTION("error classes") {
    CHECK_THROWS_AS(parse_dimacs_string(""), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 2\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 1\n1 0\n2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("p dnf 2 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 1\n1 x 0\n"), ParseError);
  }
}
