#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coalition.hpp"
#include "graph.hpp"

namespace icc {

// Parameterized identifier of a named graph family.
struct FamilySpec {
  enum class Kind {
    Path,          // Path(n), n >= 1
    Cycle,         // Cycle(n), n >= 3
    Complete,      // Complete(n), n >= 1
    Empty,         // Empty(n), n >= 1
    Star,          // Star(n) = K_{1,n-1}, n >= 1
    DoubleStar,    // DoubleStar(p,q), p,q >= 1
    Multipartite,  // CompleteMultipartite(sizes), all >= 1
    FamilyB,       // FamilyB(n), clique order n >= 4
    DeltaSharp,    // DeltaSharp(n), clique order n >= 1
    K0,            // the order-8 bipartite gadget
    FamilyK,       // FamilyK(k), k >= 1
  };

  Kind kind;
  std::vector<int> params;

  static FamilySpec path(int n) { return {Kind::Path, {n}}; }
  static FamilySpec cycle(int n) { return {Kind::Cycle, {n}}; }
  static FamilySpec complete(int n) { return {Kind::Complete, {n}}; }
  static FamilySpec empty(int n) { return {Kind::Empty, {n}}; }
  static FamilySpec star(int n) { return {Kind::Star, {n}}; }
  static FamilySpec double_star(int p, int q) { return {Kind::DoubleStar, {p, q}}; }
  static FamilySpec multipartite(std::vector<int> sizes) {
    return {Kind::Multipartite, std::move(sizes)};
  }
  static FamilySpec family_b(int n) { return {Kind::FamilyB, {n}}; }
  static FamilySpec delta_sharp(int n) { return {Kind::DeltaSharp, {n}}; }
  static FamilySpec k0() { return {Kind::K0, {}}; }
  static FamilySpec family_k(int k) { return {Kind::FamilyK, {k}}; }
};

// Parses the CLI grammar "<name>:<param>[,<param>...]", e.g. "path:9",
// "multipartite:1,2,3", "familyK:2". Throws std::invalid_argument.
FamilySpec parse_family_spec(const std::string& text);
std::string family_spec_text(const FamilySpec& spec);

// Labeled instance of the family; the conventional v_1..v_n map to 0..n-1.
Graph generate(const FamilySpec& spec);

// The closed-form IC value; nullopt means no ic-partition exists (FamilyB).
std::optional<int> formula_ic(const FamilySpec& spec);

// Witness ic-partition transcribed from the constructive proofs; absent for
// FamilyB. Every returned partition passes verify_ic_partition and has
// formula_ic(spec) classes.
std::optional<Partition> witness_partition(const FamilySpec& spec);

enum class Membership {
  FamilyB,
  FamilyF,
  B1,
  B2,
  B3,
  K0,
  FamilyK,
  TwoMaximalCliques,
  AlphaTwo,
};

std::string membership_name(Membership m);

// Structural family-membership predicates; practical for order <= 12.
std::set<Membership> classify(const Graph& g);

struct EnumOptions {
  bool connected = false;
  bool triangle_free = false;
  bool up_to_isomorphism = false;
};

// Exhaustive labeled enumeration over the 2^(n(n-1)/2) adjacency masks,
// filtered, with optional pairwise-isomorphism dedup. n <= 7.
std::vector<Graph> enumerate_graphs(int n, const EnumOptions& options = {});

// One representative per isomorphism class, from Prufer sequences with
// canonical-subtree dedup. 1 <= n <= 10.
std::vector<Graph> enumerate_trees(int n);

}  // namespace icc
