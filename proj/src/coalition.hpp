#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace icc {

// Disjoint nonempty classes covering V of the associated graph.
struct Partition {
  std::vector<Mask> classes;

  bool operator==(const Partition&) const = default;
};

// Throws std::invalid_argument unless classes are nonempty, pairwise disjoint
// and cover V(g).
void check_partition(const Graph& g, const Partition& p);

// True iff a and b are disjoint nonempty independent sets, neither of which is
// an independent dominating set, whose union is an independent dominating set.
// Throws on empty or overlapping inputs.
bool forms_ic(const Graph& g, Mask a, Mask b);

enum class ClassVerdict {
  SingletonDominating,
  HasPartners,
  NotIndependent,
  IndependentDominatingNonSingleton,
  NoPartner,
};

struct VerifyReport {
  bool valid = false;
  std::vector<ClassVerdict> verdicts;
  std::vector<std::vector<int>> partners;  // per class, indices it forms_ic with
};

std::string verdict_name(ClassVerdict v);

// Each class must be a singleton whose vertex is full, or an independent
// non-independent-dominating set forming an independent coalition with at
// least one other class. Partner lists are exhaustive.
VerifyReport verify_ic_partition(const Graph& g, const Partition& p);

// Coalition-partition check: every class is a singleton dominating set, or a
// non-dominating set whose union with some other non-dominating class
// dominates. Independence plays no role here.
bool verify_c_partition(const Graph& g, const Partition& p);

struct ICSolution {
  int value = 0;
  Partition witness;
};

// nullopt means no ic-partition of any order exists.
using ICResult = std::optional<ICSolution>;

// Exact maximum over valid ic-partitions. Enumerates set partitions into
// independent classes in restricted-growth order and verifies candidates.
// Throws when order is 0 or exceeds max_order.
ICResult ic_number(const Graph& g, int max_order = 12);

// Exact C(G) over all set partitions; nullopt when no c-partition exists.
std::optional<int> coalition_number(const Graph& g, int max_order = 10);

// Number of classes each class forms an independent coalition with. The
// partition must pass verify_ic_partition; throws otherwise.
std::vector<int> partner_counts(const Graph& g, const Partition& p);

}  // namespace icc
