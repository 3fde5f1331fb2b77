#include "record.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coalition.hpp"
#include "graph6.hpp"
#include "invariants.hpp"

namespace icc {

namespace {

std::string render_partition(const Partition& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.classes.size(); ++i) {
    if (i) out += ",";
    out += "[";
    auto verts = to_vertex_list(p.classes[i]);
    for (size_t j = 0; j < verts.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(verts[j]);
    }
    out += "]";
  }
  return out + "]";
}

nlohmann::json solve_to_json(ScanRecord::Solve s, int value) {
  switch (s) {
    case ScanRecord::Solve::Value: return value;
    case ScanRecord::Solve::None: return "none";
    case ScanRecord::Solve::Skipped: return "skipped";
  }
  return nullptr;
}

void solve_from_json(const nlohmann::json& j, ScanRecord::Solve& s, int& value) {
  if (j.is_number_integer()) {
    s = ScanRecord::Solve::Value;
    value = j.get<int>();
  } else if (j == "none") {
    s = ScanRecord::Solve::None;
    value = 0;
  } else {
    s = ScanRecord::Solve::Skipped;
    value = 0;
  }
}

std::string solve_to_csv(ScanRecord::Solve s, int value) {
  switch (s) {
    case ScanRecord::Solve::Value: return std::to_string(value);
    case ScanRecord::Solve::None: return "none";
    case ScanRecord::Solve::Skipped: return "skipped";
  }
  return "";
}

}  // namespace

ScanRecord compute_record(const Graph& g, int ic_max_order,
                          int coalition_max_order) {
  ScanRecord r;
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.edges = g.edge_count();
  r.connected = is_connected(g);
  r.triangle_free = is_triangle_free(g);
  r.girth = girth(g);
  r.alpha = independence_number(g);
  r.gamma_i = independent_domination_number(g);
  r.chi = chromatic_number(g);
  r.idomatic = idomatic_number(g);
  if (r.n >= 1 && r.n <= ic_max_order) {
    ICResult ic = ic_number(g, ic_max_order);
    if (ic) {
      r.ic = ScanRecord::Solve::Value;
      r.ic_value = ic->value;
      r.witness = render_partition(ic->witness);
    } else {
      r.ic = ScanRecord::Solve::None;
    }
  }
  if (r.n >= 1 && r.n <= coalition_max_order) {
    auto c = coalition_number(g, coalition_max_order);
    if (c) {
      r.coalition = ScanRecord::Solve::Value;
      r.coalition_value = *c;
    } else {
      r.coalition = ScanRecord::Solve::None;
    }
  }
  return r;
}

nlohmann::json record_to_json(const ScanRecord& r) {
  nlohmann::json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["connected"] = r.connected;
  j["triangle_free"] = r.triangle_free;
  j["girth"] = r.girth ? nlohmann::json(*r.girth) : nlohmann::json(nullptr);
  j["alpha"] = r.alpha;
  j["gamma_i"] = r.gamma_i;
  j["chi"] = r.chi;
  j["idomatic"] = r.idomatic ? nlohmann::json(*r.idomatic) : nlohmann::json(nullptr);
  j["ic"] = solve_to_json(r.ic, r.ic_value);
  j["coalition"] = solve_to_json(r.coalition, r.coalition_value);
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
  if (r.error) j["error"] = *r.error;
  return j;
}

ScanRecord record_from_json(const nlohmann::json& j) {
  ScanRecord r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.n = j.at("n").get<int>();
  r.edges = j.at("edges").get<int>();
  r.connected = j.at("connected").get<bool>();
  r.triangle_free = j.at("triangle_free").get<bool>();
  if (!j.at("girth").is_null()) r.girth = j.at("girth").get<int>();
  r.alpha = j.at("alpha").get<int>();
  r.gamma_i = j.at("gamma_i").get<int>();
  r.chi = j.at("chi").get<int>();
  if (!j.at("idomatic").is_null()) r.idomatic = j.at("idomatic").get<int>();
  solve_from_json(j.at("ic"), r.ic, r.ic_value);
  solve_from_json(j.at("coalition"), r.coalition, r.coalition_value);
  if (j.contains("witness") && !j.at("witness").is_null())
    r.witness = j.at("witness").get<std::string>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  return r;
}

std::string csv_header() {
  return "graph6,n,edges,connected,triangle_free,girth,alpha,gamma_i,chi,"
         "idomatic,ic,coalition";
}

std::string record_to_csv(const ScanRecord& r) {
  std::ostringstream out;
  out << r.graph6 << ',' << r.n << ',' << r.edges << ','
      << (r.connected ? "true" : "false") << ','
      << (r.triangle_free ? "true" : "false") << ','
      << (r.girth ? std::to_string(*r.girth) : "") << ',' << r.alpha << ','
      << r.gamma_i << ',' << r.chi << ','
      << (r.idomatic ? std::to_string(*r.idomatic) : "") << ','
      << solve_to_csv(r.ic, r.ic_value) << ','
      << solve_to_csv(r.coalition, r.coalition_value);
  return out.str();
}

RecordCache::RecordCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      ScanRecord r = record_from_json(j);
      entries_[r.graph6] = std::move(r);
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring corrupt cache entry at " << path_ << ":"
                << lineno << ": " << e.what() << "\n";
    }
  }
}

std::optional<ScanRecord> RecordCache::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void RecordCache::put(const ScanRecord& record) {
  entries_[record.graph6] = record;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot write cache file: " + path_);
  out << record_to_json(record).dump() << "\n";
}

std::string default_cache_path() {
  if (const char* env = std::getenv("ICCOAL_CACHE"); env && *env) return env;
  return ".iccoal-cache.jsonl";
}

}  // namespace icc
