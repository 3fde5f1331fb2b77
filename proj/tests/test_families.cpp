#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "coalition.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "invariants.hpp"

using namespace icc;

TEST_CASE("family spec grammar") {
  FamilySpec p = parse_family_spec("path:9");
  CHECK(p.kind == FamilySpec::Kind::Path);
  CHECK(p.params == std::vector<int>{9});
  CHECK(family_spec_text(p) == "path:9");

  FamilySpec m = parse_family_spec("multipartite:1,2,3");
  CHECK(m.params == std::vector<int>{1, 2, 3});

  CHECK(parse_family_spec("k0").kind == FamilySpec::Kind::K0);
  CHECK(parse_family_spec("familyK:2").params == std::vector<int>{2});
  CHECK(parse_family_spec("doublestar:2,3").kind == FamilySpec::Kind::DoubleStar);

  CHECK_THROWS_AS(parse_family_spec("pathology:9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("path"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("path:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("path:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("cycle:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("familyB:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("k0:1"), std::invalid_argument);
}

TEST_CASE("generated structure") {
  Graph p5 = generate(FamilySpec::path(5));
  CHECK(p5.order() == 5);
  CHECK(p5.edge_count() == 4);
  CHECK(is_connected(p5));

  Graph c6 = generate(FamilySpec::cycle(6));
  CHECK(c6.edge_count() == 6);
  CHECK(girth(c6) == 6);

  Graph s5 = generate(FamilySpec::star(5));
  CHECK(max_degree(s5) == 4);
  CHECK(s5.edge_count() == 4);

  Graph ds = generate(FamilySpec::double_star(2, 3));
  CHECK(ds.order() == 7);
  CHECK(ds.edge_count() == 6);
  CHECK(ds.adjacent(0, 1));

  Graph mp = generate(FamilySpec::multipartite({2, 2, 2}));
  CHECK(mp.order() == 6);
  CHECK(mp.edge_count() == 12);
  CHECK(chromatic_number(mp) == 3);

  // Clique 0..3 plus a degree-2 and a pendant attachment.
  Graph b4 = generate(FamilySpec::family_b(4));
  CHECK(b4.order() == 6);
  CHECK(b4.edge_count() == 9);
  CHECK(b4.degree(4) == 2);
  CHECK(b4.degree(5) == 1);
  CHECK(b4.degree(3) == 5);

  Graph ds3 = generate(FamilySpec::delta_sharp(3));
  CHECK(ds3.order() == 5);
  CHECK(ds3.edge_count() == 3 + 2);

  Graph k0 = generate(FamilySpec::k0());
  CHECK(k0.order() == 8);
  CHECK(k0.edge_count() == 12);
  CHECK(min_degree(k0) == 3);
  CHECK(max_degree(k0) == 3);
  CHECK(chromatic_number(k0) == 2);
  CHECK(girth(k0) == 4);

  Graph k1 = generate(FamilySpec::family_k(1));
  CHECK(k1.order() == 10);
  CHECK(is_triangle_free(k1));
  CHECK(girth(k1) == 4);
}

TEST_CASE("closed-form values") {
  CHECK(formula_ic(FamilySpec::path(1)) == 1);
  CHECK(formula_ic(FamilySpec::path(4)) == 4);
  CHECK(formula_ic(FamilySpec::path(5)) == 4);
  CHECK(formula_ic(FamilySpec::path(9)) == 5);
  CHECK(formula_ic(FamilySpec::path(10)) == 6);
  CHECK(formula_ic(FamilySpec::cycle(6)) == 6);
  CHECK(formula_ic(FamilySpec::cycle(7)) == 5);
  CHECK(formula_ic(FamilySpec::cycle(8)) == 6);
  CHECK(formula_ic(FamilySpec::complete(7)) == 7);
  CHECK(formula_ic(FamilySpec::empty(1)) == 1);
  CHECK(formula_ic(FamilySpec::empty(5)) == 2);
  CHECK(formula_ic(FamilySpec::star(6)) == 3);
  CHECK(formula_ic(FamilySpec::double_star(2, 2)) == 4);
  // 2k - m with k parts, m of them singletons.
  CHECK(formula_ic(FamilySpec::multipartite({1, 2, 3})) == 5);
  CHECK(formula_ic(FamilySpec::multipartite({2, 2})) == 4);
  CHECK(formula_ic(FamilySpec::family_b(5)) == std::nullopt);
  CHECK(formula_ic(FamilySpec::delta_sharp(4)) == 6);
  CHECK(formula_ic(FamilySpec::k0()) == 8);
  CHECK(formula_ic(FamilySpec::family_k(2)) == 12);
}

TEST_CASE("witnesses verify with the promised class count") {
  std::vector<FamilySpec> specs;
  for (int n = 1; n <= 12; ++n) specs.push_back(FamilySpec::path(n));
  for (int n = 3; n <= 12; ++n) specs.push_back(FamilySpec::cycle(n));
  for (int n = 1; n <= 6; ++n) specs.push_back(FamilySpec::complete(n));
  for (int n = 1; n <= 5; ++n) specs.push_back(FamilySpec::empty(n));
  for (int n = 3; n <= 7; ++n) specs.push_back(FamilySpec::star(n));
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) specs.push_back(FamilySpec::double_star(p, q));
  specs.push_back(FamilySpec::multipartite({1, 2, 3}));
  specs.push_back(FamilySpec::multipartite({2, 3, 4}));
  for (int n = 1; n <= 5; ++n) specs.push_back(FamilySpec::delta_sharp(n));
  specs.push_back(FamilySpec::k0());
  specs.push_back(FamilySpec::family_k(1));
  specs.push_back(FamilySpec::family_k(2));

  for (const FamilySpec& spec : specs) {
    CAPTURE(family_spec_text(spec));
    Graph g = generate(spec);
    auto w = witness_partition(spec);
    REQUIRE(w);
    CHECK(verify_ic_partition(g, *w).valid);
    CHECK(static_cast<int>(w->classes.size()) == formula_ic(spec));
  }
  CHECK(witness_partition(FamilySpec::family_b(4)) == std::nullopt);
}

TEST_CASE("witness class count is optimal on solver-sized instances") {
  for (const FamilySpec& spec :
       {FamilySpec::path(8), FamilySpec::cycle(9), FamilySpec::star(6),
        FamilySpec::double_star(2, 2), FamilySpec::multipartite({1, 2, 3}),
        FamilySpec::delta_sharp(4), FamilySpec::k0()}) {
    CAPTURE(family_spec_text(spec));
    auto ic = ic_number(generate(spec));
    REQUIRE(ic);
    CHECK(ic->value == formula_ic(spec));
  }
}

TEST_CASE("classify") {
  auto p4 = classify(generate(FamilySpec::path(4)));
  CHECK(p4.count(Membership::FamilyF));

  auto c4 = classify(generate(FamilySpec::cycle(4)));
  CHECK(c4.count(Membership::B1));
  CHECK(c4.count(Membership::AlphaTwo));
  CHECK(c4.count(Membership::TwoMaximalCliques));  // two opposite edges

  auto b4 = classify(generate(FamilySpec::family_b(4)));
  CHECK(b4.count(Membership::FamilyB));

  auto k0 = classify(generate(FamilySpec::k0()));
  CHECK(k0.count(Membership::K0));

  auto fk = classify(generate(FamilySpec::family_k(1)));
  CHECK(fk.count(Membership::FamilyK));

  auto k2 = classify(generate(FamilySpec::complete(2)));
  // A lone endpoint of K2 is not a maximal clique.
  CHECK(k2.count(Membership::TwoMaximalCliques) == 0);
  CHECK(k2.count(Membership::AlphaTwo) == 0);  // alpha(K2) = 1

  // K2 u K2 splits into two maximal cliques.
  Graph two_k2 = Graph::build(4, {{0, 1}, {2, 3}});
  CHECK(classify(two_k2).count(Membership::TwoMaximalCliques));

  // Empty side conditions: a graph with isolated vertices whose rest is an
  // edge lies in B2.
  Graph b2 = Graph::build(3, {{0, 1}});
  CHECK(classify(b2).count(Membership::B2));
}

TEST_CASE("labeled enumeration with filters") {
  CHECK(enumerate_graphs(3).size() == 8);
  CHECK(enumerate_graphs(3, {.up_to_isomorphism = true}).size() == 4);
  CHECK(enumerate_graphs(4, {.up_to_isomorphism = true}).size() == 11);
  CHECK(enumerate_graphs(4, {.connected = true, .up_to_isomorphism = true}).size() ==
        6);
  CHECK(enumerate_graphs(5, {.up_to_isomorphism = true}).size() == 34);
  CHECK(enumerate_graphs(4, {.triangle_free = true, .up_to_isomorphism = true})
            .size() == 7);
  CHECK_THROWS_AS(enumerate_graphs(8), std::invalid_argument);
}

TEST_CASE("tree enumeration") {
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) {
    auto trees = enumerate_trees(n);
    CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
    for (const Graph& t : trees) {
      CHECK(t.order() == n);
      CHECK(t.edge_count() == n - 1);
      CHECK(is_connected(t));
    }
  }
  CHECK_THROWS_AS(enumerate_trees(11), std::invalid_argument);
}
