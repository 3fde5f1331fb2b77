#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace icc {

bool is_independent(const Graph& g, Mask s);
bool is_dominating(const Graph& g, Mask s);
bool is_independent_dominating(const Graph& g, Mask s);

// alpha(G); branch and bound over masks.
int independence_number(const Graph& g);

// gamma_i(G): minimum cardinality of a maximal independent set. On the empty
// graph K_n-bar this is n (the only maximal independent set is V).
int independent_domination_number(const Graph& g);

// Exact chi(G); iterative k-coloring search from a clique lower bound.
int chromatic_number(const Graph& g);

// Maximum number of classes in a partition of V into independent dominating
// sets; nullopt when no such partition of any size exists.
std::optional<int> idomatic_number(const Graph& g);

// Exactly the maximal independent sets of g (maximal independent sets and
// independent dominating sets coincide). Bron-Kerbosch on the complement.
std::vector<Mask> enumerate_independent_dominating_sets(const Graph& g);

}  // namespace icc
