#include "graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace icc {

Graph Graph::build(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order out of range: " + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

Graph Graph::build(int n, std::initializer_list<std::pair<int, int>> edges) {
  return build(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency(std::vector<Mask> adj) {
  int n = static_cast<int>(adj.size());
  if (n > kMaxVertices) throw std::invalid_argument("graph order out of range");
  Mask all = all_vertices(n);
  for (int v = 0; v < n; ++v) {
    if (adj[v] & ~all) throw std::invalid_argument("adjacency mask out of range");
    if (contains(adj[v], v)) throw std::invalid_argument("self-loop rejected");
  }
  for (int v = 0; v < n; ++v)
    for_each_vertex(adj[v], [&](int u) {
      if (!contains(adj[u], v)) throw std::invalid_argument("adjacency not symmetric");
    });
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(adj);
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<Mask> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = all_vertices(n) & ~g.closed_neighborhood(v);
  return Graph::from_adjacency(std::move(adj));
}

Graph graph_join(const Graph& g, const Graph& h) {
  int n = g.order(), m = h.order();
  if (n + m > kMaxVertices) throw std::invalid_argument("join exceeds vertex capacity");
  std::vector<Mask> adj(n + m);
  Mask hmask = all_vertices(n + m) & ~all_vertices(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v) | hmask;
  for (int v = 0; v < m; ++v) adj[n + v] = (h.neighbors(v) << n) | all_vertices(n);
  return Graph::from_adjacency(std::move(adj));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = g.order(), m = h.order();
  if (n + m > kMaxVertices) throw std::invalid_argument("union exceeds vertex capacity");
  std::vector<Mask> adj(n + m);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  for (int v = 0; v < m; ++v) adj[n + v] = h.neighbors(v) << n;
  return Graph::from_adjacency(std::move(adj));
}

Graph induced(const Graph& g, Mask s) {
  if (s & ~g.vertex_mask()) throw std::invalid_argument("vertex set outside graph");
  std::vector<int> verts = to_vertex_list(s);
  int m = static_cast<int>(verts.size());
  std::vector<Mask> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(verts[i], verts[j])) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
  return Graph::from_adjacency(std::move(adj));
}

std::optional<int> girth(const Graph& g) {
  int n = g.order();
  int best = -1;
  // BFS from every vertex; the shortest cycle through the root is found when a
  // non-tree edge closes two BFS branches.
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<int> queue;
    dist[root] = 0;
    queue.push_back(root);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      bool done = false;
      for_each_vertex(g.neighbors(u), [&](int w) {
        if (done) return;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      });
      (void)done;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool is_triangle_free(const Graph& g) {
  int n = g.order();
  for (int v = 0; v < n; ++v) {
    Mask nv = g.neighbors(v);
    bool found = false;
    for_each_vertex(nv, [&](int u) {
      if (u > v && (g.neighbors(u) & nv)) found = true;
    });
    if (found) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  int n = g.order();
  if (n <= 1) return true;
  Mask seen = bit(0), frontier = bit(0);
  while (frontier) {
    Mask next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == g.vertex_mask();
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return g.order() == 0 ? 0 : best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

Mask full_vertices(const Graph& g) {
  Mask out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out |= bit(v);
  return out;
}

Mask isolated_vertices(const Graph& g) {
  Mask out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out |= bit(v);
  return out;
}

EdgeSpan edge_set_between(const Graph& g, Mask x, Mask y) {
  if (x & y) throw std::invalid_argument("edge_set_between: sets overlap");
  bool any = false, all = true;
  for_each_vertex(x, [&](int v) {
    Mask hit = g.neighbors(v) & y;
    if (hit) any = true;
    if (hit != y) all = false;
  });
  if (!x || !y) return EdgeSpan::Empty;
  if (!any) return EdgeSpan::Empty;
  return all ? EdgeSpan::Full : EdgeSpan::Mixed;
}

namespace {

// Sorted multiset of neighbor degrees, used as a per-vertex signature.
std::vector<int> neighbor_degrees(const Graph& g, int v) {
  std::vector<int> ds;
  for_each_vertex(g.neighbors(v), [&](int u) { ds.push_back(g.degree(u)); });
  std::sort(ds.begin(), ds.end());
  return ds;
}

bool extend_mapping(const Graph& g, const Graph& h, std::vector<int>& map,
                    Mask used, int v,
                    const std::vector<std::vector<int>>& candidates) {
  int n = g.order();
  if (v == n) return true;
  for (int w : candidates[v]) {
    if (contains(used, w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (g.adjacent(u, v) != h.adjacent(map[u], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    if (extend_mapping(g, h, map, used | bit(w), v + 1, candidates)) return true;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  int n = g.order();
  if (n != h.order()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  std::vector<std::vector<int>> sig_g(n), sig_h(n);
  for (int v = 0; v < n; ++v) {
    sig_g[v] = neighbor_degrees(g, v);
    sig_h[v] = neighbor_degrees(h, v);
  }
  std::vector<std::vector<int>> candidates(n);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w)
      if (dg[v] == dh[w] && sig_g[v] == sig_h[w]) candidates[v].push_back(w);
    if (candidates[v].empty()) return false;
  }
  std::vector<int> map(n, -1);
  return extend_mapping(g, h, map, 0, 0, candidates);
}

}  // namespace icc
