#include "invariants.hpp"

#include <algorithm>
#include <numeric>

namespace icc {

bool is_independent(const Graph& g, Mask s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if (g.neighbors(v) & s) ok = false;
  });
  return ok;
}

bool is_dominating(const Graph& g, Mask s) {
  Mask covered = 0;
  for_each_vertex(s, [&](int v) { covered |= g.closed_neighborhood(v); });
  return covered == g.vertex_mask();
}

bool is_independent_dominating(const Graph& g, Mask s) {
  return is_independent(g, s) && is_dominating(g, s);
}

namespace {

struct MisSearch {
  const Graph& g;
  int best = 0;

  void run(Mask cand, int size) {
    best = std::max(best, size);
    if (size + set_size(cand) <= best) return;
    // Branch on a highest-degree candidate: include it or discard it.
    int pick = -1, pick_deg = -1;
    for_each_vertex(cand, [&](int v) {
      int d = set_size(g.neighbors(v) & cand);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    });
    run(cand & ~g.closed_neighborhood(pick), size + 1);
    run(cand & ~bit(pick), size);
  }
};

void bron_kerbosch(const Graph& comp, Mask r, Mask p, Mask x,
                   std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  int pivot = -1, pivot_cover = -1;
  for_each_vertex(p | x, [&](int u) {
    int c = set_size(p & comp.neighbors(u));
    if (c > pivot_cover) {
      pivot_cover = c;
      pivot = u;
    }
  });
  Mask ext = p & ~comp.neighbors(pivot);
  for_each_vertex(ext, [&](int v) {
    bron_kerbosch(comp, r | bit(v), p & comp.neighbors(v), x & comp.neighbors(v), out);
    p &= ~bit(v);
    x |= bit(v);
  });
}

struct IdomaticSearch {
  const Graph& g;
  const std::vector<Mask>& sets;
  std::vector<std::vector<int>> by_vertex;  // set indices containing v
  int best = -1;

  explicit IdomaticSearch(const Graph& graph, const std::vector<Mask>& s)
      : g(graph), sets(s), by_vertex(graph.order()) {
    for (int i = 0; i < static_cast<int>(sets.size()); ++i)
      for_each_vertex(sets[i], [&](int v) { by_vertex[v].push_back(i); });
  }

  void run(Mask covered, int parts) {
    if (covered == g.vertex_mask()) {
      best = std::max(best, parts);
      return;
    }
    int v = lowest_vertex(~covered & g.vertex_mask());
    for (int i : by_vertex[v])
      if (!(sets[i] & covered)) run(covered | sets[i], parts + 1);
  }
};

bool colorable(const Graph& g, int k, const std::vector<int>& order, size_t idx,
               std::vector<int>& color) {
  if (idx == order.size()) return true;
  int v = order[idx];
  int used = 0;
  for (size_t j = 0; j < idx; ++j)
    used = std::max(used, color[order[j]] + 1);
  int limit = std::min(k, used + 1);  // first use of a fresh color is canonical
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for_each_vertex(g.neighbors(v), [&](int u) {
      if (color[u] == c) ok = false;
    });
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, k, order, idx + 1, color)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int independence_number(const Graph& g) {
  if (g.order() == 0) return 0;
  MisSearch s{g};
  s.run(g.vertex_mask(), 0);
  return s.best;
}

std::vector<Mask> enumerate_independent_dominating_sets(const Graph& g) {
  std::vector<Mask> out;
  if (g.order() == 0) return out;
  Graph comp = complement(g);
  bron_kerbosch(comp, 0, g.vertex_mask(), 0, out);
  return out;
}

int independent_domination_number(const Graph& g) {
  if (g.order() == 0) return 0;
  auto sets = enumerate_independent_dominating_sets(g);
  int best = g.order();
  for (Mask s : sets) best = std::min(best, set_size(s));
  return best;
}

int chromatic_number(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  Graph comp = complement(g);
  int lower = independence_number(comp);  // clique number of g
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = lower; k <= n; ++k) {
    std::vector<int> color(n, -1);
    if (colorable(g, k, order, 0, color)) return k;
  }
  return n;
}

std::optional<int> idomatic_number(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  auto sets = enumerate_independent_dominating_sets(g);
  IdomaticSearch search(g, sets);
  search.run(0, 0);
  if (search.best < 0) return std::nullopt;
  return search.best;
}

}  // namespace icc
