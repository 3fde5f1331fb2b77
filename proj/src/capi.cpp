#include "iccoal.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "coalition.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "record.hpp"
#include "theorems.hpp"

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps the core library's exception taxonomy onto status codes.
template <typename Fn>
iccoal_status guarded(iccoal_status failure_code, Fn&& fn) {
  try {
    return fn();
  } catch (const icc::Graph6Error& e) {
    set_error(e.what());
    return ICCOAL_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return failure_code;
  } catch (const std::exception& e) {
    set_error(e.what());
    return failure_code;
  }
}

iccoal_status require(bool ok, const char* msg) {
  if (ok) return ICCOAL_OK;
  set_error(msg);
  return ICCOAL_ERR_INVALID;
}

icc::Partition partition_from_json(const icc::Graph& g, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON list");
  icc::Partition p;
  for (const auto& cls : j) {
    if (!cls.is_array())
      throw std::invalid_argument("each partition class must be a vertex list");
    icc::Mask m = 0;
    for (const auto& v : cls) {
      if (!v.is_number_integer())
        throw std::invalid_argument("partition vertices must be integers");
      int vertex = v.get<int>();
      if (vertex < 0 || vertex >= g.order())
        throw std::invalid_argument("partition vertex " + std::to_string(vertex) +
                                    " out of range");
      m |= icc::bit(vertex);
    }
    p.classes.push_back(m);
  }
  return p;
}

}  // namespace

struct iccoal_graph {
  icc::Graph graph;
};

struct iccoal_cache {
  icc::RecordCache cache;
};

extern "C" {

const char* iccoal_last_error(void) { return g_last_error.c_str(); }

void iccoal_string_free(char* s) { delete[] s; }

iccoal_status iccoal_graph_from_graph6(const char* text, iccoal_graph** out) {
  if (auto s = require(text && out, "null argument")) return s;
  return guarded(ICCOAL_ERR_PARSE, [&] {
    *out = new iccoal_graph{icc::parse_graph6(text)};
    return ICCOAL_OK;
  });
}

iccoal_status iccoal_graph_from_family(const char* spec, iccoal_graph** out) {
  if (auto s = require(spec && out, "null argument")) return s;
  return guarded(ICCOAL_ERR_PARSE, [&] {
    *out = new iccoal_graph{icc::generate(icc::parse_family_spec(spec))};
    return ICCOAL_OK;
  });
}

void iccoal_graph_free(iccoal_graph* g) { delete g; }

int iccoal_graph_order(const iccoal_graph* g) { return g ? g->graph.order() : -1; }

int iccoal_graph_edge_count(const iccoal_graph* g) {
  return g ? g->graph.edge_count() : -1;
}

iccoal_status iccoal_graph_to_graph6(const iccoal_graph* g, char** out) {
  if (auto s = require(g && out, "null argument")) return s;
  return guarded(ICCOAL_ERR_INVALID, [&] {
    *out = dup_string(icc::encode_graph6(g->graph));
    return ICCOAL_OK;
  });
}

iccoal_status iccoal_compute_json(const iccoal_graph* g, int ic_max_order,
                                  int coalition_max_order, char** out_json) {
  if (auto s = require(g && out_json, "null argument")) return s;
  return guarded(ICCOAL_ERR_BOUND, [&] {
    icc::ScanRecord r =
        icc::compute_record(g->graph, ic_max_order > 0 ? ic_max_order : 12,
                            coalition_max_order > 0 ? coalition_max_order : 10);
    *out_json = dup_string(icc::record_to_json(r).dump());
    return ICCOAL_OK;
  });
}

iccoal_status iccoal_verify_ic_json(const iccoal_graph* g,
                                    const char* partition_json, int* out_valid,
                                    char** out_report_json) {
  if (auto s = require(g && partition_json && out_valid, "null argument"))
    return s;
  return guarded(ICCOAL_ERR_INVALID, [&] {
    icc::Partition p;
    try {
      p = partition_from_json(g->graph, partition_json);
    } catch (const nlohmann::json::exception& e) {
      set_error(e.what());
      return ICCOAL_ERR_PARSE;
    }
    icc::check_partition(g->graph, p);
    icc::VerifyReport report = icc::verify_ic_partition(g->graph, p);
    *out_valid = report.valid ? 1 : 0;
    if (out_report_json) {
      nlohmann::json j;
      j["valid"] = report.valid;
      nlohmann::json classes = nlohmann::json::array();
      for (size_t i = 0; i < report.verdicts.size(); ++i) {
        nlohmann::json c;
        c["vertices"] = icc::to_vertex_list(p.classes[i]);
        c["verdict"] = icc::verdict_name(report.verdicts[i]);
        c["partners"] = report.partners[i];
        classes.push_back(std::move(c));
      }
      j["classes"] = std::move(classes);
      *out_report_json = dup_string(j.dump());
    }
    return ICCOAL_OK;
  });
}

iccoal_status iccoal_classify_json(const iccoal_graph* g, char** out_json) {
  if (auto s = require(g && out_json, "null argument")) return s;
  return guarded(ICCOAL_ERR_BOUND, [&] {
    nlohmann::json names = nlohmann::json::array();
    for (icc::Membership m : icc::classify(g->graph))
      names.push_back(icc::membership_name(m));
    *out_json = dup_string(names.dump());
    return ICCOAL_OK;
  });
}

iccoal_status iccoal_theorem_ids(char** out_json) {
  if (auto s = require(out_json != nullptr, "null argument")) return s;
  *out_json = dup_string(nlohmann::json(icc::theorem_ids()).dump());
  return ICCOAL_OK;
}

iccoal_status iccoal_run_theorem(const char* id, int order_override,
                                 int* out_pass, char** out_json) {
  if (auto s = require(id && out_pass, "null argument")) return s;
  bool known = false;
  for (const std::string& candidate : icc::theorem_ids())
    if (candidate == id) known = true;
  if (!known) {
    set_error(std::string("unknown theorem id: ") + id);
    return ICCOAL_ERR_UNKNOWN_ID;
  }
  return guarded(ICCOAL_ERR_BOUND, [&] {
    icc::TheoremCheck check = icc::run_theorem(id, order_override);
    *out_pass = check.pass ? 1 : 0;
    if (out_json) {
      nlohmann::json j;
      j["id"] = check.id;
      j["scope"] = check.scope;
      j["pass"] = check.pass;
      j["checked"] = check.checked;
      if (!check.pass) {
        j["counterexample_graph6"] = check.counterexample_graph6;
        j["details"] = check.details;
      }
      *out_json = dup_string(j.dump());
    }
    return ICCOAL_OK;
  });
}

iccoal_status iccoal_cache_open(const char* path, iccoal_cache** out) {
  if (auto s = require(path && out, "null argument")) return s;
  return guarded(ICCOAL_ERR_IO, [&] {
    *out = new iccoal_cache{icc::RecordCache(path)};
    return ICCOAL_OK;
  });
}

void iccoal_cache_close(iccoal_cache* c) { delete c; }

iccoal_status iccoal_cache_get(const iccoal_cache* c, const char* graph6_key,
                               char** out_json) {
  if (auto s = require(c && graph6_key && out_json, "null argument")) return s;
  return guarded(ICCOAL_ERR_IO, [&] {
    auto hit = c->cache.get(graph6_key);
    *out_json = hit ? dup_string(icc::record_to_json(*hit).dump()) : nullptr;
    return ICCOAL_OK;
  });
}

iccoal_status iccoal_cache_put(iccoal_cache* c, const char* record_json) {
  if (auto s = require(c && record_json, "null argument")) return s;
  return guarded(ICCOAL_ERR_IO, [&] {
    icc::ScanRecord r;
    try {
      r = icc::record_from_json(nlohmann::json::parse(record_json));
    } catch (const nlohmann::json::exception& e) {
      set_error(e.what());
      return ICCOAL_ERR_PARSE;
    }
    c->cache.put(r);
    return ICCOAL_OK;
  });
}

iccoal_status iccoal_default_cache_path(char** out) {
  if (auto s = require(out != nullptr, "null argument")) return s;
  *out = dup_string(icc::default_cache_path());
  return ICCOAL_OK;
}

}  // extern "C"
