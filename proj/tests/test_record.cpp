#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "graph.hpp"
#include "graph6.hpp"
#include "record.hpp"

using namespace icc;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = "test_record_" + name + ".jsonl";
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("compute_record on K2") {
  ScanRecord r = compute_record(parse_graph6("A_"));
  CHECK(r.graph6 == "A_");
  CHECK(r.n == 2);
  CHECK(r.edges == 1);
  CHECK(r.connected);
  CHECK(r.triangle_free);
  CHECK(r.girth == std::nullopt);
  CHECK(r.alpha == 1);
  CHECK(r.gamma_i == 1);
  CHECK(r.chi == 2);
  CHECK(r.idomatic == 2);
  CHECK(r.ic == ScanRecord::Solve::Value);
  CHECK(r.ic_value == 2);
  CHECK(r.coalition == ScanRecord::Solve::Value);
  CHECK(r.coalition_value == 2);
  REQUIRE(r.witness);
  CHECK(*r.witness == "[[0],[1]]");
}

TEST_CASE("solver outcomes none and skipped") {
  // Clique 0..3 plus attachments of degree 2 and 1: no ic-partition exists.
  Graph b4 = Graph::build(
      6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 2}, {4, 3}, {5, 3}});
  ScanRecord none = compute_record(b4);
  CHECK(none.ic == ScanRecord::Solve::None);
  CHECK_FALSE(none.witness);

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 13; ++i) edges.push_back({i, (i + 1) % 14});
  ScanRecord skipped = compute_record(Graph::build(14, edges));
  CHECK(skipped.ic == ScanRecord::Solve::Skipped);
  CHECK(skipped.coalition == ScanRecord::Solve::Skipped);
  CHECK(skipped.alpha == 7);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (rng() & 1) edges.push_back({i, j});
    ScanRecord r = compute_record(Graph::build(5, edges));
    CHECK(record_from_json(record_to_json(r)) == r);
  }
}

TEST_CASE("csv layout") {
  CHECK(csv_header() ==
        "graph6,n,edges,connected,triangle_free,girth,alpha,gamma_i,chi,"
        "idomatic,ic,coalition");
  ScanRecord r = compute_record(parse_graph6("Bw"));
  CHECK(record_to_csv(r) == "Bw,3,3,true,false,3,1,1,3,3,3,3");

  // Optional invariants render as empty cells, solver states as words.
  ScanRecord p2 = compute_record(parse_graph6("A_"));
  CHECK(record_to_csv(p2) == "A_,2,1,true,true,,1,1,2,2,2,2");
}

TEST_CASE("cache put then get") {
  TempFile tmp("basic");
  RecordCache cache(tmp.path);
  CHECK(cache.size() == 0);
  CHECK_FALSE(cache.get("Bw"));

  ScanRecord r = compute_record(parse_graph6("Bw"));
  cache.put(r);
  auto hit = cache.get("Bw");
  REQUIRE(hit);
  CHECK(*hit == r);

  // A fresh instance reloads from disk.
  RecordCache reload(tmp.path);
  CHECK(reload.size() == 1);
  CHECK(reload.get("Bw") == r);
}

TEST_CASE("cache equals recomputation on random order-5 graphs") {
  TempFile tmp("consistency");
  std::mt19937_64 rng(20260824);
  std::vector<Graph> graphs;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (rng() & 1) edges.push_back({i, j});
    graphs.push_back(Graph::build(5, edges));
  }
  {
    RecordCache cache(tmp.path);
    for (const Graph& g : graphs) cache.put(compute_record(g));
  }
  RecordCache cache(tmp.path);
  for (const Graph& g : graphs) {
    auto hit = cache.get(encode_graph6(g));
    REQUIRE(hit);
    CHECK(*hit == compute_record(g));
  }
}

TEST_CASE("corrupt cache lines are skipped") {
  TempFile tmp("corrupt");
  {
    std::ofstream out(tmp.path);
    out << record_to_json(compute_record(parse_graph6("A_"))).dump() << "\n";
    out << "{ not json\n";
    out << "{\"graph6\": \"missing fields\"}\n";
    out << record_to_json(compute_record(parse_graph6("Bw"))).dump() << "\n";
  }
  RecordCache cache(tmp.path);
  CHECK(cache.size() == 2);
  CHECK(cache.get("A_"));
  CHECK(cache.get("Bw"));
}

TEST_CASE("default cache path") {
  CHECK_FALSE(default_cache_path().empty());
}
