// iccoal: compute/verify independent-coalition partitions, scan graph6
// streams, and run the theorem harness. Talks to the engine only through the
// C API in iccoal.h.

#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iccoal.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // invalid partition / counterexample found
constexpr int kExitUsage = 2;  // parse or usage errors

using json = nlohmann::json;

struct GraphHandle {
  iccoal_graph* g = nullptr;
  ~GraphHandle() { iccoal_graph_free(g); }
};

struct CacheHandle {
  iccoal_cache* c = nullptr;
  ~CacheHandle() { iccoal_cache_close(c); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  iccoal_string_free(s);
  return out;
}

// Family specs and graph6 strings never overlap: family names contain bytes
// outside the graph6 range, so trying the family grammar first is safe.
bool open_graph(const std::string& input, GraphHandle& out, std::string& error) {
  if (iccoal_graph_from_family(input.c_str(), &out.g) == ICCOAL_OK) return true;
  std::string family_error = iccoal_last_error();
  if (iccoal_graph_from_graph6(input.c_str(), &out.g) == ICCOAL_OK) return true;
  error = "not a family spec (" + family_error + ") and not graph6 (" +
          iccoal_last_error() + ")";
  return false;
}

std::string resolve_cache_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  char* raw = nullptr;
  iccoal_default_cache_path(&raw);
  return take_string(raw);
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

const char* kCsvHeader =
    "graph6,n,edges,connected,triangle_free,girth,alpha,gamma_i,chi,idomatic,"
    "ic,coalition";

std::string record_csv_row(const json& r) {
  static const char* fields[] = {"graph6",   "n",     "edges",   "connected",
                                 "triangle_free", "girth", "alpha",   "gamma_i",
                                 "chi",      "idomatic", "ic",   "coalition"};
  std::string row;
  for (const char* f : fields) {
    if (!row.empty()) row += ',';
    row += r.contains(f) ? csv_cell(r.at(f)) : "";
  }
  if (r.contains("error")) row += ",error: " + r.at("error").get<std::string>();
  return row;
}

int run_compute(const std::string& input, int ic_max, int c_max, bool no_cache,
                const std::string& cache_flag) {
  GraphHandle gh;
  std::string parse_error;
  if (!open_graph(input, gh, parse_error)) {
    std::cerr << "error: " << parse_error << "\n";
    return kExitUsage;
  }
  if (iccoal_graph_order(gh.g) > ic_max) {
    std::cerr << "error: solver bound exceeded: order "
              << iccoal_graph_order(gh.g) << " > " << ic_max
              << " (raise --ic-max)\n";
    return kExitUsage;
  }
  std::string key = take_string([&] {
    char* s = nullptr;
    iccoal_graph_to_graph6(gh.g, &s);
    return s;
  }());

  CacheHandle cache;
  if (!no_cache &&
      iccoal_cache_open(resolve_cache_path(cache_flag).c_str(), &cache.c) !=
          ICCOAL_OK) {
    std::cerr << "error: " << iccoal_last_error() << "\n";
    return kExitUsage;
  }
  if (cache.c) {
    char* hit = nullptr;
    if (iccoal_cache_get(cache.c, key.c_str(), &hit) == ICCOAL_OK && hit) {
      std::cout << take_string(hit) << "\n";
      return kExitOk;
    }
  }
  char* out = nullptr;
  if (iccoal_compute_json(gh.g, ic_max, c_max, &out) != ICCOAL_OK) {
    std::cerr << "error: " << iccoal_last_error() << "\n";
    return kExitUsage;
  }
  std::string record = take_string(out);
  if (cache.c && iccoal_cache_put(cache.c, record.c_str()) != ICCOAL_OK)
    std::cerr << "warning: cache update failed: " << iccoal_last_error() << "\n";
  std::cout << record << "\n";
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& partition) {
  GraphHandle gh;
  std::string parse_error;
  if (!open_graph(input, gh, parse_error)) {
    std::cerr << "error: " << parse_error << "\n";
    return kExitUsage;
  }
  int valid = 0;
  char* report_raw = nullptr;
  iccoal_status st =
      iccoal_verify_ic_json(gh.g, partition.c_str(), &valid, &report_raw);
  if (st != ICCOAL_OK) {
    std::cerr << "error: " << iccoal_last_error() << "\n";
    return kExitUsage;
  }
  json report = json::parse(take_string(report_raw));
  for (size_t i = 0; i < report["classes"].size(); ++i) {
    const json& cls = report["classes"][i];
    std::cout << "class " << i << " " << cls["vertices"].dump() << ": "
              << cls["verdict"].get<std::string>();
    if (!cls["partners"].empty())
      std::cout << " partners=" << cls["partners"].dump();
    std::cout << "\n";
  }
  std::cout << (valid ? "valid" : "invalid") << "\n";
  return valid ? kExitOk : kExitFail;
}

json scan_line_record(const std::string& line, int ic_max, int c_max,
                      iccoal_cache* cache) {
  GraphHandle gh;
  if (iccoal_graph_from_graph6(line.c_str(), &gh.g) != ICCOAL_OK)
    return json{{"graph6", line}, {"error", iccoal_last_error()}};
  if (cache) {
    std::string key = take_string([&] {
      char* s = nullptr;
      iccoal_graph_to_graph6(gh.g, &s);
      return s;
    }());
    char* hit = nullptr;
    if (iccoal_cache_get(cache, key.c_str(), &hit) == ICCOAL_OK && hit)
      return json::parse(take_string(hit));
  }
  char* out = nullptr;
  if (iccoal_compute_json(gh.g, ic_max, c_max, &out) != ICCOAL_OK)
    return json{{"graph6", line}, {"error", iccoal_last_error()}};
  return json::parse(take_string(out));
}

int run_scan(const std::string& path, const std::string& format, int skip_above,
             int c_max, int jobs, bool no_cache, const std::string& cache_flag) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) {
      std::cerr << "error: cannot read " << path << "\n";
      return kExitUsage;
    }
    in = &file;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(*in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }

  CacheHandle cache;
  if (!no_cache &&
      iccoal_cache_open(resolve_cache_path(cache_flag).c_str(), &cache.c) !=
          ICCOAL_OK) {
    std::cerr << "error: " << iccoal_last_error() << "\n";
    return kExitUsage;
  }

  // Workers fill a slot per input line; ordering is restored at print time
  // and the cache sees a single writer.
  std::vector<json> records(lines.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1))
      records[i] = scan_line_record(lines[i], skip_above, c_max, cache.c);
  };
  jobs = std::max(1, jobs);
  if (jobs == 1 || lines.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (format == "csv") std::cout << kCsvHeader << "\n";
  for (const json& r : records) {
    if (format == "csv")
      std::cout << record_csv_row(r) << "\n";
    else
      std::cout << r.dump() << "\n";
    if (cache.c && !r.contains("error"))
      if (iccoal_cache_put(cache.c, r.dump().c_str()) != ICCOAL_OK)
        std::cerr << "warning: cache update failed: " << iccoal_last_error()
                  << "\n";
  }
  return kExitOk;
}

int run_theorems(std::vector<std::string> ids, int order_override) {
  char* ids_raw = nullptr;
  iccoal_theorem_ids(&ids_raw);
  std::vector<std::string> known =
      json::parse(take_string(ids_raw)).get<std::vector<std::string>>();
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = known;

  bool all_pass = true;
  for (const std::string& id : ids) {
    int pass = 0;
    char* out = nullptr;
    iccoal_status st = iccoal_run_theorem(id.c_str(), order_override, &pass, &out);
    if (st == ICCOAL_ERR_UNKNOWN_ID) {
      std::cerr << "error: " << iccoal_last_error() << "\n";
      return kExitUsage;
    }
    if (st != ICCOAL_OK) {
      std::cerr << "error: " << id << ": " << iccoal_last_error() << "\n";
      return kExitUsage;
    }
    json check = json::parse(take_string(out));
    if (pass) {
      std::cout << check["id"].get<std::string>() << ": pass (checked "
                << check["checked"].get<int>() << "; "
                << check["scope"].get<std::string>() << ")\n";
    } else {
      all_pass = false;
      std::cout << check["id"].get<std::string>() << ": FAIL counterexample="
                << check["counterexample_graph6"].get<std::string>() << " ("
                << check["details"].get<std::string>() << ")\n";
    }
  }
  return all_pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact independent-coalition computations on small graphs.\n"
      "Graph inputs are graph6 strings or family specs "
      "<name>:<param>[,<param>...] with names: path, cycle, complete, empty, "
      "star, doublestar, multipartite, familyB, deltasharp, k0, familyK "
      "(e.g. path:9, multipartite:1,2,3, k0).\n"
      "Results cache: one JSONL file, $ICCOAL_CACHE or ./.iccoal-cache.jsonl."};
  app.require_subcommand(1);

  std::string input, partition, scan_path = "-", format = "jsonl";
  std::string cache_flag;
  int ic_max = 12, c_max = 10, jobs = 1, order_override = 0;
  bool no_cache = false;
  std::vector<std::string> theorem_list;

  auto* compute = app.add_subcommand("compute", "Full invariant record as JSON");
  compute->add_option("input", input, "graph6 string or family spec")->required();
  compute->add_option("--ic-max", ic_max, "max order for the IC solver");
  compute->add_option("--c-max", c_max, "max order for the coalition solver");
  compute->add_flag("--no-cache", no_cache, "bypass the results cache");
  compute->add_option("--cache", cache_flag, "cache file path override");

  auto* verify = app.add_subcommand("verify", "Check an ic-partition");
  verify->add_option("input", input, "graph6 string or family spec")->required();
  verify
      ->add_option("--partition", partition,
                   "vertex lists as JSON, e.g. [[0,2],[1],[3]]")
      ->required();

  auto* scan = app.add_subcommand("scan", "Evaluate a graph6 stream");
  scan->add_option("file", scan_path, "input file, or - for stdin");
  scan->add_option("--format", format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  scan->add_option("--skip-ic-above", ic_max,
                   "mark ic/witness as skipped above this order");
  scan->add_option("--c-max", c_max, "max order for the coalition solver");
  scan->add_option("--jobs", jobs, "parallel evaluation threads");
  scan->add_flag("--no-cache", no_cache, "bypass the results cache");
  scan->add_option("--cache", cache_flag, "cache file path override");

  auto* theorems = app.add_subcommand("theorems", "Run replayed-statement checks");
  theorems->add_option("ids", theorem_list, "check ids, or 'all' (default)");
  theorems->add_option("--order", order_override,
                       "override the census/tree order bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute->parsed())
      return run_compute(input, ic_max, c_max, no_cache, cache_flag);
    if (verify->parsed()) return run_verify(input, partition);
    if (scan->parsed())
      return run_scan(scan_path, format, ic_max, c_max, jobs, no_cache,
                      cache_flag);
    if (theorems->parsed()) return run_theorems(theorem_list, order_override);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
