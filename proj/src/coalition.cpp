#include "coalition.hpp"

#include <stdexcept>

#include "invariants.hpp"

namespace icc {

void check_partition(const Graph& g, const Partition& p) {
  Mask seen = 0;
  for (Mask c : p.classes) {
    if (!c) throw std::invalid_argument("partition class is empty");
    if (c & ~g.vertex_mask())
      throw std::invalid_argument("partition class outside vertex set");
    if (c & seen) throw std::invalid_argument("partition classes overlap");
    seen |= c;
  }
  if (seen != g.vertex_mask())
    throw std::invalid_argument("partition does not cover all vertices");
}

bool forms_ic(const Graph& g, Mask a, Mask b) {
  if (!a || !b) throw std::invalid_argument("forms_ic: empty set");
  if (a & b) throw std::invalid_argument("forms_ic: sets overlap");
  Mask u = a | b;
  if (!is_independent(g, u)) return false;
  // Sides of an independent union are independent, so "not an independent
  // dominating set" reduces to "not dominating".
  if (is_dominating(g, a) || is_dominating(g, b)) return false;
  return is_dominating(g, u);
}

std::string verdict_name(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::SingletonDominating: return "singleton-dominating";
    case ClassVerdict::HasPartners: return "has-partners";
    case ClassVerdict::NotIndependent: return "not-independent";
    case ClassVerdict::IndependentDominatingNonSingleton:
      return "independent-dominating-non-singleton";
    case ClassVerdict::NoPartner: return "no-partner";
  }
  return "?";
}

VerifyReport verify_ic_partition(const Graph& g, const Partition& p) {
  check_partition(g, p);
  int k = static_cast<int>(p.classes.size());
  VerifyReport report;
  report.valid = true;
  report.verdicts.resize(k);
  report.partners.resize(k);
  std::vector<bool> indep(k), dom(k);
  for (int i = 0; i < k; ++i) {
    indep[i] = is_independent(g, p.classes[i]);
    dom[i] = is_dominating(g, p.classes[i]);
  }
  for (int i = 0; i < k; ++i) {
    Mask c = p.classes[i];
    if (!indep[i]) {
      report.verdicts[i] = ClassVerdict::NotIndependent;
      report.valid = false;
      continue;
    }
    if (set_size(c) == 1 && dom[i]) {
      report.verdicts[i] = ClassVerdict::SingletonDominating;
      continue;
    }
    if (dom[i]) {
      // Independent dominating but not a singleton dominating set.
      report.verdicts[i] = ClassVerdict::IndependentDominatingNonSingleton;
      report.valid = false;
      continue;
    }
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      if (!indep[j] || dom[j]) continue;
      Mask u = c | p.classes[j];
      if (is_independent(g, u) && is_dominating(g, u))
        report.partners[i].push_back(j);
    }
    if (report.partners[i].empty()) {
      report.verdicts[i] = ClassVerdict::NoPartner;
      report.valid = false;
    } else {
      report.verdicts[i] = ClassVerdict::HasPartners;
    }
  }
  return report;
}

bool verify_c_partition(const Graph& g, const Partition& p) {
  check_partition(g, p);
  int k = static_cast<int>(p.classes.size());
  std::vector<bool> dom(k);
  for (int i = 0; i < k; ++i) dom[i] = is_dominating(g, p.classes[i]);
  for (int i = 0; i < k; ++i) {
    if (dom[i]) {
      if (set_size(p.classes[i]) != 1) return false;
      continue;
    }
    bool found = false;
    for (int j = 0; j < k && !found; ++j) {
      if (j == i || dom[j]) continue;
      if (is_dominating(g, p.classes[i] | p.classes[j])) found = true;
    }
    if (!found) return false;
  }
  return true;
}

namespace {

struct ICSearch {
  const Graph& g;
  std::vector<Mask> classes;
  int best = -1;
  Partition witness;

  void run(int v) {
    int n = g.order();
    if (v == n) {
      if (static_cast<int>(classes.size()) <= best) return;
      Partition p{classes};
      if (verify_ic_partition(g, p).valid) {
        best = static_cast<int>(classes.size());
        witness = std::move(p);
      }
      return;
    }
    // Restricted growth: try existing classes first, then open a new one.
    // A vertex may only join a class it has no neighbor in. Index access:
    // the recursion grows the vector, so references would dangle.
    size_t existing = classes.size();
    for (size_t i = 0; i < existing; ++i) {
      if (g.neighbors(v) & classes[i]) continue;
      classes[i] |= bit(v);
      run(v + 1);
      classes[i] &= ~bit(v);
    }
    classes.push_back(bit(v));
    run(v + 1);
    classes.pop_back();
  }
};

struct CSearch {
  const Graph& g;
  std::vector<Mask> classes;
  int best = -1;

  void run(int v) {
    int n = g.order();
    if (v == n) {
      if (static_cast<int>(classes.size()) <= best) return;
      Partition p{classes};
      if (verify_c_partition(g, p))
        best = static_cast<int>(classes.size());
      return;
    }
    size_t existing = classes.size();
    for (size_t i = 0; i < existing; ++i) {
      classes[i] |= bit(v);
      run(v + 1);
      classes[i] &= ~bit(v);
    }
    classes.push_back(bit(v));
    run(v + 1);
    classes.pop_back();
  }
};

}  // namespace

ICResult ic_number(const Graph& g, int max_order) {
  if (g.order() < 1) throw std::invalid_argument("ic_number requires order >= 1");
  if (g.order() > max_order)
    throw std::invalid_argument("ic_number: order exceeds solver bound");
  ICSearch search{g};
  search.run(0);
  if (search.best < 0) return std::nullopt;
  return ICSolution{search.best, std::move(search.witness)};
}

std::optional<int> coalition_number(const Graph& g, int max_order) {
  if (g.order() < 1)
    throw std::invalid_argument("coalition_number requires order >= 1");
  if (g.order() > max_order)
    throw std::invalid_argument("coalition_number: order exceeds solver bound");
  CSearch search{g};
  search.run(0);
  if (search.best < 0) return std::nullopt;
  return search.best;
}

std::vector<int> partner_counts(const Graph& g, const Partition& p) {
  VerifyReport report = verify_ic_partition(g, p);
  if (!report.valid)
    throw std::invalid_argument("partner_counts: not a valid ic-partition");
  std::vector<int> counts;
  counts.reserve(report.partners.size());
  for (const auto& list : report.partners)
    counts.push_back(static_cast<int>(list.size()));
  return counts;
}

}  // namespace icc
