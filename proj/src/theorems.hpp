#pragma once

#include <string>
#include <vector>

namespace icc {

struct TheoremCheck {
  std::string id;
  std::string scope;
  bool pass = false;
  int checked = 0;  // number of graphs / parameter points evaluated
  std::string counterexample_graph6;
  std::string details;
};

// Stable order; one id per replayed statement.
const std::vector<std::string>& theorem_ids();

// order_override = 0 keeps the default scope. For census-backed checks it
// replaces the maximum order (<= 7); for tree checks the maximum tree order
// (<= 10); family-parameter checks ignore it. Throws on unknown ids.
TheoremCheck run_theorem(const std::string& id, int order_override = 0);

}  // namespace icc
