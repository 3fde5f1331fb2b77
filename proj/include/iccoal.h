/* C interface to the independent-coalition engine.
 *
 * All functions returning iccoal_status report failure details through
 * iccoal_last_error(), whose buffer is thread-local and overwritten by the
 * next failing call on the same thread. Strings handed out through char**
 * parameters are heap-allocated; release them with iccoal_string_free.
 */
#ifndef ICCOAL_H
#define ICCOAL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iccoal_status {
  ICCOAL_OK = 0,
  ICCOAL_ERR_PARSE = 1,      /* malformed graph6 / family spec / partition */
  ICCOAL_ERR_BOUND = 2,      /* solver or enumeration bound exceeded */
  ICCOAL_ERR_INVALID = 3,    /* invalid argument (null handle, bad partition) */
  ICCOAL_ERR_IO = 4,         /* cache file not readable or writable */
  ICCOAL_ERR_UNKNOWN_ID = 5, /* theorem id not in iccoal_theorem_ids() */
} iccoal_status;

typedef struct iccoal_graph iccoal_graph;
typedef struct iccoal_cache iccoal_cache;

/* Message for the most recent failure on this thread; never NULL. */
const char* iccoal_last_error(void);

void iccoal_string_free(char* s);

/* --- graphs ------------------------------------------------------------- */

iccoal_status iccoal_graph_from_graph6(const char* text, iccoal_graph** out);

/* Family grammar: "<name>:<param>[,<param>...]", e.g. "path:9", "k0",
 * "multipartite:1,2,3". */
iccoal_status iccoal_graph_from_family(const char* spec, iccoal_graph** out);

void iccoal_graph_free(iccoal_graph* g);

int iccoal_graph_order(const iccoal_graph* g);
int iccoal_graph_edge_count(const iccoal_graph* g);
iccoal_status iccoal_graph_to_graph6(const iccoal_graph* g, char** out);

/* --- computation -------------------------------------------------------- */

/* Full record as a JSON object (fields graph6, n, edges, connected,
 * triangle_free, girth, alpha, gamma_i, chi, idomatic, ic, coalition,
 * witness). ic/coalition are an integer, "none", or "skipped"; a solve is
 * skipped when the order exceeds its max-order argument (pass 0 for the
 * defaults: 12 for ic, 10 for coalition). */
iccoal_status iccoal_compute_json(const iccoal_graph* g, int ic_max_order,
                                  int coalition_max_order, char** out_json);

/* partition_json is a list of vertex lists, e.g. "[[0,2],[1],[3],[4]]".
 * out_valid is 1 iff the partition is a valid ic-partition; the report JSON
 * carries per-class verdicts and exhaustive partner index lists. */
iccoal_status iccoal_verify_ic_json(const iccoal_graph* g,
                                    const char* partition_json, int* out_valid,
                                    char** out_report_json);

/* Family-membership names for the graph, as a JSON list of strings. */
iccoal_status iccoal_classify_json(const iccoal_graph* g, char** out_json);

/* --- theorem harness ---------------------------------------------------- */

/* JSON list of the known check ids, in stable order. */
iccoal_status iccoal_theorem_ids(char** out_json);

/* Runs one check. order_override = 0 keeps the default scope. out_pass is
 * 1/0; the JSON object has id, scope, pass, checked, and on failure
 * counterexample_graph6 + details. */
iccoal_status iccoal_run_theorem(const char* id, int order_override,
                                 int* out_pass, char** out_json);

/* --- results cache ------------------------------------------------------ */

/* Append-safe JSONL store keyed by exact graph6 strings. A missing file is
 * an empty cache; corrupt lines are skipped with a warning on stderr. */
iccoal_status iccoal_cache_open(const char* path, iccoal_cache** out);
void iccoal_cache_close(iccoal_cache* c);

/* Miss sets *out_json to NULL and still returns ICCOAL_OK. */
iccoal_status iccoal_cache_get(const iccoal_cache* c, const char* graph6_key,
                               char** out_json);

/* record_json must have the iccoal_compute_json layout. */
iccoal_status iccoal_cache_put(iccoal_cache* c, const char* record_json);

/* Resolves $ICCOAL_CACHE, falling back to ".iccoal-cache.jsonl". */
iccoal_status iccoal_default_cache_path(char** out);

#ifdef __cplusplus
}
#endif

#endif /* ICCOAL_H */
