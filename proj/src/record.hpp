#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "graph.hpp"

namespace icc {

// One fully evaluated graph: invariants plus solver outcomes, keyed by its
// (labeled) graph6 string.
struct ScanRecord {
  enum class Solve { Value, None, Skipped };

  std::string graph6;
  int n = 0;
  int edges = 0;
  bool connected = false;
  bool triangle_free = false;
  std::optional<int> girth;
  int alpha = 0;
  int gamma_i = 0;
  int chi = 0;
  std::optional<int> idomatic;
  Solve ic = Solve::Skipped;
  int ic_value = 0;
  Solve coalition = Solve::Skipped;
  int coalition_value = 0;
  std::optional<std::string> witness;  // e.g. "[[0,2],[1],[3]]"
  std::optional<std::string> error;    // set for undecodable scan lines

  bool operator==(const ScanRecord&) const = default;
};

// Solvers are skipped (never silently degraded) above the given order bounds.
ScanRecord compute_record(const Graph& g, int ic_max_order = 12,
                          int coalition_max_order = 10);

nlohmann::json record_to_json(const ScanRecord& r);
ScanRecord record_from_json(const nlohmann::json& j);

// Fixed contract: graph6,n,edges,connected,triangle_free,girth,alpha,gamma_i,
// chi,idomatic,ic,coalition
std::string csv_header();
std::string record_to_csv(const ScanRecord& r);

// Append-safe persistent key-value store: one JSON object per line. Lookups
// are exact-string on the graph6 key; corrupt lines are skipped with a
// warning on stderr and never trusted.
class RecordCache {
 public:
  explicit RecordCache(std::string path);

  std::optional<ScanRecord> get(const std::string& key) const;
  void put(const ScanRecord& record);

  const std::string& path() const { return path_; }
  size_t size() const { return entries_.size(); }

 private:
  std::string path_;
  std::map<std::string, ScanRecord> entries_;
};

// Resolves the cache location: $ICCOAL_CACHE if set, else
// ".iccoal-cache.jsonl" in the working directory.
std::string default_cache_path();

}  // namespace icc
