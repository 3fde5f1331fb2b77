#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace icc {

// Vertex sets are single-word bit masks; graphs are capped at 64 vertices.
using Mask = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr Mask all_vertices(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask bit(int v) { return Mask{1} << v; }

inline int set_size(Mask m) { return std::popcount(m); }

inline bool contains(Mask m, int v) { return (m >> v) & 1; }

inline int lowest_vertex(Mask m) { return std::countr_zero(m); }

// Calls f(v) for each vertex in the mask, ascending.
template <typename F>
void for_each_vertex(Mask m, F&& f) {
  while (m) {
    int v = std::countr_zero(m);
    f(v);
    m &= m - 1;
  }
}

inline std::vector<int> to_vertex_list(Mask m) {
  std::vector<int> out;
  for_each_vertex(m, [&](int v) { out.push_back(v); });
  return out;
}

// Immutable simple undirected graph. adj[v] is the open neighborhood N(v).
// Invariants: symmetric, irreflexive, all masks confined to bits 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on endpoints >= n or self-loops.
  // Duplicate edges collapse.
  static Graph build(int n, std::span<const std::pair<int, int>> edges);
  static Graph build(int n, std::initializer_list<std::pair<int, int>> edges);

  // Adopts an adjacency table; validates all invariants.
  static Graph from_adjacency(std::vector<Mask> adj);

  int order() const { return n_; }
  Mask vertex_mask() const { return all_vertices(n_); }
  Mask neighbors(int v) const { return adj_[v]; }
  Mask closed_neighborhood(int v) const { return adj_[v] | bit(v); }
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  int degree(int v) const { return set_size(adj_[v]); }
  int edge_count() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Mask> adj_;
};

Graph complement(const Graph& g);
Graph graph_join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
// Relabels the vertices of s to 0..|s|-1 in ascending original order.
Graph induced(const Graph& g, Mask s);

std::optional<int> girth(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_connected(const Graph& g);

int min_degree(const Graph& g);
int max_degree(const Graph& g);
Mask full_vertices(const Graph& g);
Mask isolated_vertices(const Graph& g);

enum class EdgeSpan { Empty, Full, Mixed };
// x and y must be disjoint; throws otherwise.
EdgeSpan edge_set_between(const Graph& g, Mask x, Mask y);

// Backtracking with degree-sequence and neighbor-degree-multiset pruning.
// Intended for small orders (<= 10 or so). Order mismatch is just false.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace icc
