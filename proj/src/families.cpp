#include "families.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "invariants.hpp"

namespace icc {

namespace {

[[noreturn]] void bad_spec(const std::string& why) {
  throw std::invalid_argument("family spec: " + why);
}

void require(bool cond, const char* why) {
  if (!cond) bad_spec(why);
}

Partition singleton_partition(int n) {
  Partition p;
  for (int v = 0; v < n; ++v) p.classes.push_back(bit(v));
  return p;
}

Mask mask_of(std::initializer_list<int> verts) {
  Mask m = 0;
  for (int v : verts) m |= bit(v);
  return m;
}

// Parameter-range checks shared by the parser; generate() re-checks so that
// specs built through the factory helpers are covered too.
void validate_params(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  const std::vector<int>& p = spec.params;
  switch (spec.kind) {
    case Kind::Cycle: require(p[0] >= 3, "cycle order must be >= 3"); break;
    case Kind::Star: require(p[0] >= 1, "star order must be >= 1"); break;
    case Kind::DoubleStar:
      require(p[0] >= 1 && p[1] >= 1, "double star needs p,q >= 1");
      break;
    case Kind::Multipartite:
      for (int s : p) require(s >= 1, "multipartite part sizes must be >= 1");
      break;
    case Kind::FamilyB: require(p[0] >= 4, "familyB clique order must be >= 4"); break;
    case Kind::DeltaSharp:
      require(p[0] >= 1, "deltasharp clique order must be >= 1");
      break;
    case Kind::FamilyK: require(p[0] >= 1, "familyK parameter must be >= 1"); break;
    default:
      if (!p.empty()) require(p[0] >= 1, "order must be >= 1");
      break;
  }
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        bad_spec("bad parameter '" + tok + "' in '" + text + "'");
      params.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto one = [&](FamilySpec::Kind kind) {
    if (params.size() != 1) bad_spec("'" + name + "' takes one parameter");
    FamilySpec spec{kind, params};
    validate_params(spec);
    return spec;
  };
  if (name == "path") return one(FamilySpec::Kind::Path);
  if (name == "cycle") return one(FamilySpec::Kind::Cycle);
  if (name == "complete") return one(FamilySpec::Kind::Complete);
  if (name == "empty") return one(FamilySpec::Kind::Empty);
  if (name == "star") return one(FamilySpec::Kind::Star);
  if (name == "familyB") return one(FamilySpec::Kind::FamilyB);
  if (name == "deltasharp") return one(FamilySpec::Kind::DeltaSharp);
  if (name == "familyK") return one(FamilySpec::Kind::FamilyK);
  if (name == "doublestar") {
    if (params.size() != 2) bad_spec("'doublestar' takes two parameters");
    FamilySpec spec{FamilySpec::Kind::DoubleStar, params};
    validate_params(spec);
    return spec;
  }
  if (name == "multipartite") {
    if (params.empty()) bad_spec("'multipartite' needs part sizes");
    FamilySpec spec{FamilySpec::Kind::Multipartite, params};
    validate_params(spec);
    return spec;
  }
  if (name == "k0") {
    if (!params.empty()) bad_spec("'k0' takes no parameters");
    return FamilySpec::k0();
  }
  bad_spec("unknown family '" + name + "'");
}

std::string family_spec_text(const FamilySpec& spec) {
  std::string name;
  switch (spec.kind) {
    case FamilySpec::Kind::Path: name = "path"; break;
    case FamilySpec::Kind::Cycle: name = "cycle"; break;
    case FamilySpec::Kind::Complete: name = "complete"; break;
    case FamilySpec::Kind::Empty: name = "empty"; break;
    case FamilySpec::Kind::Star: name = "star"; break;
    case FamilySpec::Kind::DoubleStar: name = "doublestar"; break;
    case FamilySpec::Kind::Multipartite: name = "multipartite"; break;
    case FamilySpec::Kind::FamilyB: name = "familyB"; break;
    case FamilySpec::Kind::DeltaSharp: name = "deltasharp"; break;
    case FamilySpec::Kind::K0: name = "k0"; break;
    case FamilySpec::Kind::FamilyK: name = "familyK"; break;
  }
  if (spec.params.empty()) return name;
  std::string out = name + ":";
  for (size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(spec.params[i]);
  }
  return out;
}

Graph generate(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  std::vector<std::pair<int, int>> edges;
  switch (spec.kind) {
    case Kind::Path: {
      int n = spec.params[0];
      require(n >= 1 && n <= kMaxVertices, "path order out of range");
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      return Graph::build(n, edges);
    }
    case Kind::Cycle: {
      int n = spec.params[0];
      require(n >= 3 && n <= kMaxVertices, "cycle order out of range");
      for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      return Graph::build(n, edges);
    }
    case Kind::Complete: {
      int n = spec.params[0];
      require(n >= 1 && n <= kMaxVertices, "complete order out of range");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      return Graph::build(n, edges);
    }
    case Kind::Empty: {
      int n = spec.params[0];
      require(n >= 1 && n <= kMaxVertices, "empty-graph order out of range");
      return Graph::build(n, edges);
    }
    case Kind::Star: {
      int n = spec.params[0];
      require(n >= 1 && n <= kMaxVertices, "star order out of range");
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      return Graph::build(n, edges);
    }
    case Kind::DoubleStar: {
      int p = spec.params[0], q = spec.params[1];
      require(p >= 1 && q >= 1 && p + q + 2 <= kMaxVertices,
              "double star parameters out of range");
      edges.emplace_back(0, 1);
      for (int i = 0; i < p; ++i) edges.emplace_back(0, 2 + i);
      for (int i = 0; i < q; ++i) edges.emplace_back(1, 2 + p + i);
      return Graph::build(p + q + 2, edges);
    }
    case Kind::Multipartite: {
      int n = 0;
      for (int s : spec.params) {
        require(s >= 1, "multipartite part sizes must be >= 1");
        n += s;
      }
      require(n <= kMaxVertices, "multipartite order out of range");
      std::vector<int> part_of;
      for (size_t p = 0; p < spec.params.size(); ++p)
        part_of.insert(part_of.end(), spec.params[p], static_cast<int>(p));
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
      return Graph::build(n, edges);
    }
    case Kind::FamilyB: {
      int n = spec.params[0];
      require(n >= 4 && n + 2 <= kMaxVertices, "familyB clique order out of range");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      edges.emplace_back(n, n - 1);
      edges.emplace_back(n, n - 2);
      edges.emplace_back(n + 1, n - 1);
      return Graph::build(n + 2, edges);
    }
    case Kind::DeltaSharp: {
      int n = spec.params[0];
      require(n >= 1 && n + 2 <= kMaxVertices,
              "deltasharp clique order out of range");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      edges.emplace_back(n, 0);      // b adjacent to v_1
      edges.emplace_back(n + 1, n);  // the pendant a
      return Graph::build(n + 2, edges);
    }
    case Kind::K0: {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (i != j) edges.emplace_back(i, 4 + j);
      return Graph::build(8, edges);
    }
    case Kind::FamilyK: {
      int k = spec.params[0];
      require(k >= 1 && 8 + 2 * k <= kMaxVertices, "familyK parameter out of range");
      int h3 = 8, h4 = 8 + k;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (i != j) edges.emplace_back(i, 4 + j);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < k; ++j) edges.emplace_back(i, h3 + j);  // [H1,H3] full
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < k; ++j) edges.emplace_back(4 + i, h4 + j);  // [H2,H4] full
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (i != j) edges.emplace_back(h3 + i, h4 + j);
      return Graph::build(8 + 2 * k, edges);
    }
  }
  bad_spec("unhandled kind");
}

std::optional<int> formula_ic(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::Path: {
      int n = spec.params[0];
      if (n <= 4) return n;
      if (n == 5) return 4;
      if (n <= 9) return 5;
      return 6;
    }
    case Kind::Cycle: {
      int n = spec.params[0];
      if (n <= 6) return n;
      if (n == 7) return 5;
      return 6;
    }
    case Kind::Complete:
      return spec.params[0];
    case Kind::Empty:
      return spec.params[0] == 1 ? 1 : 2;
    case Kind::Star: {
      int n = spec.params[0];
      return n >= 3 ? 3 : n;
    }
    case Kind::DoubleStar:
      return 4;
    case Kind::Multipartite: {
      int k = static_cast<int>(spec.params.size());
      int m = static_cast<int>(std::count(spec.params.begin(), spec.params.end(), 1));
      return 2 * k - m;
    }
    case Kind::FamilyB:
      return std::nullopt;
    case Kind::DeltaSharp:
      return spec.params[0] + 2;
    case Kind::K0:
      return 8;
    case Kind::FamilyK:
      return 8 + 2 * spec.params[0];
  }
  bad_spec("unhandled kind");
}

namespace {

// Witness for P_n / C_n with n >= 10 resp. even n >= 8: two long alternating
// classes plus four singletons.
Partition long_path_witness(int n) {
  Mask v1 = mask_of({0, 5}), v2 = mask_of({1, 4});
  for (int v = 8; v < n; v += 2) v1 |= bit(v);
  for (int v = 9; v < n; v += 2) v2 |= bit(v);
  Partition p;
  p.classes = {v1, v2, bit(2), bit(3), bit(6), bit(7)};
  return p;
}

// Residue classes mod 3, each split into its first vertex and the rest.
Partition cycle_mod3_witness(int n) {
  Partition p;
  for (int r = 0; r < 3; ++r) {
    Mask rest = 0;
    for (int v = r + 3; v < n; v += 3) rest |= bit(v);
    p.classes.push_back(bit(r));
    p.classes.push_back(rest);
  }
  return p;
}

// n = 6k-1: the A,A1,A2,B,B1,B2 construction (1-indexed in the source,
// shifted down by one here).
Partition cycle_mod6_5_witness(int n) {
  int k = (n + 1) / 6;
  Mask a = 0, a1 = 0, a2 = 0, b = 0, b1 = 0, b2 = 0;
  for (int i = 0; i <= k - 1; ++i) a |= bit(3 * i);
  for (int i = k; i <= 2 * k - 1; ++i) a1 |= bit(3 * i);
  for (int i = k; i <= 2 * k - 1; ++i) a2 |= bit(3 * i - 1);
  for (int i = k; i <= 2 * k; ++i) b |= bit(3 * i - 2);
  for (int i = 1; i <= k - 1; ++i) b1 |= bit(3 * i - 2);
  for (int i = 1; i <= k - 1; ++i) b2 |= bit(3 * i - 1);
  Partition p;
  p.classes = {a, a1, a2, b, b1, b2};
  return p;
}

// n = 6k+1 counterpart.
Partition cycle_mod6_1_witness(int n) {
  int k = (n - 1) / 6;
  Mask a = 0, a1 = 0, a2 = 0, b = 0, b1 = 0, b2 = 0;
  for (int i = 0; i <= k; ++i) a |= bit(3 * i);
  a |= bit(3 * k + 2);
  for (int i = k + 2; i <= 2 * k; ++i) a1 |= bit(3 * i - 1);
  for (int i = k + 2; i <= 2 * k; ++i) a2 |= bit(3 * i - 2);
  for (int i = k + 1; i <= 2 * k; ++i) b |= bit(3 * i);
  b |= bit(3 * k + 1);
  for (int i = 1; i <= k; ++i) b1 |= bit(3 * i - 2);
  for (int i = 1; i <= k; ++i) b2 |= bit(3 * i - 1);
  Partition p;
  p.classes = {a, a1, a2, b, b1, b2};
  return p;
}

}  // namespace

std::optional<Partition> witness_partition(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::Path: {
      int n = spec.params[0];
      require(n >= 1, "path order out of range");
      if (n <= 4) return singleton_partition(n);
      Partition p;
      switch (n) {
        case 5: p.classes = {mask_of({0, 2}), bit(1), bit(3), bit(4)}; break;
        case 6: p.classes = {mask_of({0, 5}), bit(1), bit(2), bit(3), bit(4)}; break;
        case 7:
          p.classes = {mask_of({0, 5}), mask_of({1, 6}), bit(2), bit(3), bit(4)};
          break;
        case 8:
          p.classes = {mask_of({0, 2, 5}), mask_of({1, 6}), bit(7), bit(3), bit(4)};
          break;
        case 9:
          p.classes = {mask_of({0, 2, 4}), mask_of({1, 3, 8}), bit(5), bit(6), bit(7)};
          break;
        default:
          return long_path_witness(n);
      }
      return p;
    }
    case Kind::Cycle: {
      int n = spec.params[0];
      require(n >= 3, "cycle order out of range");
      if (n <= 6) return singleton_partition(n);
      if (n == 7) {
        Partition p;
        p.classes = {mask_of({0, 2}), bit(4), bit(5), mask_of({3, 6}), bit(1)};
        return p;
      }
      // Lemma precedence: even, then mod 3, then 5 mod 6, then 1 mod 6.
      if (n % 2 == 0) return long_path_witness(n);
      if (n % 3 == 0) return cycle_mod3_witness(n);
      if (n % 6 == 5) return cycle_mod6_5_witness(n);
      return cycle_mod6_1_witness(n);
    }
    case Kind::Complete:
      return singleton_partition(spec.params[0]);
    case Kind::Empty: {
      int n = spec.params[0];
      if (n == 1) return singleton_partition(1);
      Partition p;
      p.classes = {bit(0), all_vertices(n) & ~bit(0)};
      return p;
    }
    case Kind::Star: {
      int n = spec.params[0];
      if (n <= 2) return singleton_partition(n);
      Partition p;
      p.classes = {bit(0), bit(1), all_vertices(n) & ~mask_of({0, 1})};
      return p;
    }
    case Kind::DoubleStar: {
      int p_ = spec.params[0], q_ = spec.params[1];
      Mask leaves0 = 0, leaves1 = 0;
      for (int i = 0; i < p_; ++i) leaves0 |= bit(2 + i);
      for (int i = 0; i < q_; ++i) leaves1 |= bit(2 + p_ + i);
      Partition p;
      p.classes = {bit(0), bit(1), leaves0, leaves1};
      return p;
    }
    case Kind::Multipartite: {
      Partition p;
      int base = 0;
      for (int s : spec.params) {
        if (s == 1) {
          p.classes.push_back(bit(base));
        } else {
          Mask rest = 0;
          for (int v = base + 1; v < base + s; ++v) rest |= bit(v);
          p.classes.push_back(bit(base));
          p.classes.push_back(rest);
        }
        base += s;
      }
      return p;
    }
    case Kind::FamilyB:
      return std::nullopt;
    case Kind::DeltaSharp:
      return singleton_partition(spec.params[0] + 2);
    case Kind::K0:
      return singleton_partition(8);
    case Kind::FamilyK:
      return singleton_partition(8 + 2 * spec.params[0]);
  }
  bad_spec("unhandled kind");
}

namespace {

bool is_clique(const Graph& g, Mask s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if ((s & ~bit(v)) & ~g.neighbors(v)) ok = false;
  });
  return ok;
}

bool is_maximal_clique(const Graph& g, Mask s) {
  if (!is_clique(g, s)) return false;
  bool extendable = false;
  for_each_vertex(g.vertex_mask() & ~s, [&](int v) {
    if ((s & g.neighbors(v)) == s) extendable = true;
  });
  return !extendable;
}

// 2-coloring per component; nullopt when an odd cycle shows up.
struct Bipartition {
  std::vector<std::pair<Mask, Mask>> component_sides;
};

std::optional<Bipartition> bipartition(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n, -1);
  Bipartition out;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    Mask side[2] = {0, 0};
    color[s] = 0;
    side[0] |= bit(s);
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      bool odd = false;
      for_each_vertex(g.neighbors(u), [&](int w) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          side[color[w]] |= bit(w);
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
    out.component_sides.emplace_back(side[0], side[1]);
  }
  return out;
}

// Can the per-component sides be flipped so that both global sides have
// at least `need` vertices?
bool sides_reach(const Bipartition& bp, int need) {
  size_t c = bp.component_sides.size();
  for (Mask flips = 0; flips < (Mask{1} << c); ++flips) {
    int left = 0, right = 0;
    for (size_t i = 0; i < c; ++i) {
      auto [a, b] = bp.component_sides[i];
      if (contains(flips, static_cast<int>(i))) std::swap(a, b);
      left += set_size(a);
      right += set_size(b);
    }
    if (left >= need && right >= need) return true;
  }
  return false;
}

bool in_family_f(const Graph& g) {
  int n = g.order();
  if (n < 3 || min_degree(g) != 1) return false;
  for (int x = 0; x < n; ++x) {
    if (g.degree(x) != 1) continue;
    int y = lowest_vertex(g.neighbors(x));
    Mask rest = g.vertex_mask() & ~mask_of({x, y});
    if (is_clique(g, rest)) return true;
  }
  return false;
}

bool two_maximal_cliques(const Graph& g) {
  int n = g.order();
  if (n < 2) return false;
  Mask all = g.vertex_mask();
  for (Mask a = 1; a < all; ++a)
    if (is_maximal_clique(g, a) && is_maximal_clique(g, all & ~a)) return true;
  return false;
}

}  // namespace

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::FamilyB: return "familyB";
    case Membership::FamilyF: return "familyF";
    case Membership::B1: return "B1";
    case Membership::B2: return "B2";
    case Membership::B3: return "B3";
    case Membership::K0: return "k0";
    case Membership::FamilyK: return "familyK";
    case Membership::TwoMaximalCliques: return "two-maximal-cliques";
    case Membership::AlphaTwo: return "alpha2";
  }
  return "?";
}

std::set<Membership> classify(const Graph& g) {
  int n = g.order();
  if (n > 12) throw std::invalid_argument("classify: order beyond practical bound");
  std::set<Membership> out;
  if (n >= 6 && are_isomorphic(g, generate(FamilySpec::family_b(n - 2))))
    out.insert(Membership::FamilyB);
  if (n == 8 && are_isomorphic(g, generate(FamilySpec::k0())))
    out.insert(Membership::K0);
  if (n >= 10 && n % 2 == 0 &&
      are_isomorphic(g, generate(FamilySpec::family_k((n - 8) / 2))))
    out.insert(Membership::FamilyK);
  if (in_family_f(g)) out.insert(Membership::FamilyF);
  if (n >= 1 && independence_number(g) == 2) out.insert(Membership::AlphaTwo);
  if (two_maximal_cliques(g)) out.insert(Membership::TwoMaximalCliques);

  Mask iso = isolated_vertices(g);
  if (!iso && n >= 4 && min_degree(g) >= 1) {
    if (auto bp = bipartition(g); bp && sides_reach(*bp, 2) &&
                                  idomatic_number(g) == std::optional<int>(2))
      out.insert(Membership::B1);
  }
  if (iso) {
    Graph h = induced(g, g.vertex_mask() & ~iso);
    if (h.order() >= 2 && min_degree(h) >= 1) {
      bool bip = bipartition(h).has_value();
      auto id = idomatic_number(h);
      if (bip && id == std::optional<int>(2)) out.insert(Membership::B2);
      if (h.order() >= 3 && chromatic_number(h) <= 3 && id == std::optional<int>(3))
        out.insert(Membership::B3);
    }
  }
  return out;
}

std::vector<Graph> enumerate_graphs(int n, const EnumOptions& options) {
  if (n < 0 || n > 7)
    throw std::invalid_argument(
        "enumerate_graphs: n > 7; use an external graph6 stream instead");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  int nbits = static_cast<int>(pairs.size());

  std::vector<Graph> reps;
  std::unordered_map<std::string, std::vector<size_t>> buckets;
  for (Mask bits = 0; bits < (Mask{1} << nbits); ++bits) {
    std::vector<Mask> adj(n, 0);
    for (int k = 0; k < nbits; ++k)
      if (contains(bits, k)) {
        auto [u, v] = pairs[k];
        adj[u] |= bit(v);
        adj[v] |= bit(u);
      }
    Graph g = Graph::from_adjacency(std::move(adj));
    if (options.connected && !is_connected(g)) continue;
    if (options.triangle_free && !is_triangle_free(g)) continue;
    if (!options.up_to_isomorphism) {
      reps.push_back(std::move(g));
      continue;
    }
    // Invariant bucket, then pairwise isomorphism inside it.
    std::vector<int> degs;
    for (int v = 0; v < n; ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    std::string key = std::to_string(g.edge_count());
    for (int d : degs) key += "." + std::to_string(d);
    auto& bucket = buckets[key];
    bool fresh = true;
    for (size_t idx : bucket)
      if (are_isomorphic(g, reps[idx])) {
        fresh = false;
        break;
      }
    if (fresh) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(g));
    }
  }
  return reps;
}

namespace {

Graph tree_from_prufer(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::vector<std::pair<int, int>> edges;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph::build(n, edges);
}

std::string rooted_code(const Graph& g, int v, int parent) {
  std::vector<std::string> children;
  for_each_vertex(g.neighbors(v), [&](int u) {
    if (u != parent) children.push_back(rooted_code(g, u, v));
  });
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

// Canonical code of an unrooted tree: root at the center (minimum over both
// centers when there are two).
std::string tree_code(const Graph& g) {
  int n = g.order();
  if (n == 1) return "()";
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  Mask alive = g.vertex_mask();
  int remaining = n;
  while (remaining > 2) {
    Mask leaves = 0;
    for_each_vertex(alive, [&](int v) {
      if (degree[v] == 1) leaves |= bit(v);
    });
    for_each_vertex(leaves, [&](int v) {
      for_each_vertex(g.neighbors(v) & alive, [&](int u) { --degree[u]; });
    });
    alive &= ~leaves;
    remaining -= set_size(leaves);
  }
  std::string best;
  for_each_vertex(alive, [&](int c) {
    std::string code = rooted_code(g, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  });
  return best;
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("enumerate_trees: n out of range [1,10]");
  if (n == 1) return {Graph::build(1, {})};
  if (n == 2) return {Graph::build(2, {{0, 1}})};
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    Graph t = tree_from_prufer(n, seq);
    if (seen.insert(tree_code(t)).second) out.push_back(std::move(t));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

}  // namespace icc
