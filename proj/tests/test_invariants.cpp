#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "graph.hpp"
#include "invariants.hpp"

using namespace icc;

namespace {

Graph graph_from_edge_mask(int n, unsigned long long mask) {
  std::vector<std::pair<int, int>> edges;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1) edges.push_back({i, j});
  return Graph::build(n, edges);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::build(n, edges);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::build(n, edges);
}

template <typename F>
void for_each_labeled_graph(int max_order, F&& f) {
  for (int n = 1; n <= max_order; ++n) {
    int pairs = n * (n - 1) / 2;
    for (unsigned long long m = 0; m < (1ull << pairs); ++m)
      f(graph_from_edge_mask(n, m));
  }
}

// Subset-scan oracles; exponential, fine at order <= 5.
int alpha_oracle(const Graph& g) {
  int best = 0;
  for (Mask s = 0; s <= g.vertex_mask(); ++s)
    if (is_independent(g, s)) best = std::max(best, set_size(s));
  return best;
}

int gamma_i_oracle(const Graph& g) {
  int best = g.order() + 1;
  for (Mask s = 1; s <= g.vertex_mask(); ++s)
    if (is_independent_dominating(g, s)) best = std::min(best, set_size(s));
  return best;
}

int chi_oracle(const Graph& g) {
  // Minimum class count over partitions into independent sets, via
  // restricted-growth assignment.
  int n = g.order();
  int best = n;
  std::vector<int> color(n, 0);
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (used >= best) return;
    if (v == n) {
      best = used;
      return;
    }
    for (int c = 0; c <= used && c < best; ++c) {
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (color[u] == c && g.adjacent(u, v)) ok = false;
      if (!ok) continue;
      color[v] = c;
      self(self, v + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 0, 0);
  return best;
}

std::optional<int> idomatic_oracle(const Graph& g) {
  // Max classes over all set partitions whose classes are all independent
  // dominating.
  int n = g.order();
  std::vector<int> part(n, 0);
  std::optional<int> best;
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == n) {
      std::vector<Mask> classes(used, 0);
      for (int u = 0; u < n; ++u) classes[part[u]] |= bit(u);
      for (Mask c : classes)
        if (!is_independent_dominating(g, c)) return;
      if (!best || used > *best) best = used;
      return;
    }
    for (int c = 0; c <= used; ++c) {
      part[v] = c;
      self(self, v + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace

TEST_CASE("set predicates") {
  Graph c5 = cycle(5);
  CHECK(is_independent(c5, bit(0) | bit(2)));
  CHECK_FALSE(is_independent(c5, bit(0) | bit(1)));
  CHECK(is_independent(c5, 0));
  CHECK(is_dominating(c5, bit(0) | bit(2)));
  CHECK_FALSE(is_dominating(c5, bit(0)));
  CHECK(is_independent_dominating(c5, bit(0) | bit(2)));
  CHECK_FALSE(is_independent_dominating(c5, bit(0) | bit(1) | bit(3)));
}

TEST_CASE("alpha matches the subset oracle on every labeled graph of order <= 5") {
  for_each_labeled_graph(
      5, [](const Graph& g) { CHECK(independence_number(g) == alpha_oracle(g)); });
}

TEST_CASE("gamma_i matches the subset oracle and never exceeds alpha") {
  for_each_labeled_graph(5, [](const Graph& g) {
    int gi = independent_domination_number(g);
    CHECK(gi == gamma_i_oracle(g));
    CHECK(gi <= independence_number(g));
  });
}

TEST_CASE("maximal independent sets are exactly the independent dominating sets") {
  for_each_labeled_graph(5, [](const Graph& g) {
    std::vector<Mask> expected;
    for (Mask s = 1; s <= g.vertex_mask(); ++s) {
      if (!is_independent(g, s)) continue;
      bool maximal = true;
      for_each_vertex(g.vertex_mask() & ~s, [&](int v) {
        if (is_independent(g, s | bit(v))) maximal = false;
      });
      if (maximal) expected.push_back(s);
    }
    auto got = enumerate_independent_dominating_sets(g);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
  });
}

TEST_CASE("chi matches the partition oracle on every labeled graph of order <= 5") {
  for_each_labeled_graph(
      5, [](const Graph& g) { CHECK(chromatic_number(g) == chi_oracle(g)); });
}

TEST_CASE("idomatic matches the partition oracle on every labeled graph of order <= 5") {
  for_each_labeled_graph(
      5, [](const Graph& g) { CHECK(idomatic_number(g) == idomatic_oracle(g)); });
}

TEST_CASE("known small values") {
  CHECK(independent_domination_number(path(7)) == 3);
  CHECK(independent_domination_number(cycle(7)) == 3);
  CHECK(independence_number(cycle(7)) == 3);
  CHECK(chromatic_number(cycle(7)) == 3);
  CHECK(chromatic_number(cycle(6)) == 2);
  CHECK(chromatic_number(graph_from_edge_mask(4, 0b111111)) == 4);  // K4

  // C5 and C7 admit no idomatic partition; C6 splits into three.
  CHECK(idomatic_number(cycle(5)) == std::nullopt);
  CHECK(idomatic_number(cycle(7)) == std::nullopt);
  CHECK(idomatic_number(cycle(6)) == 3);

  // P4: maximal independent sets are {0,2}, {0,3}, {1,3}.
  auto mis = enumerate_independent_dominating_sets(path(4));
  std::sort(mis.begin(), mis.end());
  CHECK(mis == std::vector<Mask>{bit(0) | bit(2), bit(0) | bit(3), bit(1) | bit(3)});

  // Empty graph: the vertex set is the unique maximal independent set.
  Graph e4 = Graph::build(4, {});
  CHECK(independent_domination_number(e4) == 4);
  CHECK(idomatic_number(e4) == 1);
}
