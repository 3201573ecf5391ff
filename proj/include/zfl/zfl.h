/* C interface to the zfl random-set zero forcing library.
 *
 * Every fallible function returns a zfl_status. On failure, zfl_last_error()
 * returns a message for the calling thread until its next failing call.
 * Strings returned through `char**` are heap allocated and must be released
 * with zfl_string_free. Vertex indices are 0-based. */
#ifndef ZFL_ZFL_H
#define ZFL_ZFL_H

#include <stddef.h>
#include <stdint.h>

#if defined(ZFL_BUILDING_LIBRARY)
#define ZFL_API __attribute__((visibility("default")))
#else
#define ZFL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zfl_status {
  ZFL_OK = 0,
  ZFL_ERR_INVALID = 1,      /* malformed argument */
  ZFL_ERR_RANGE = 2,        /* index or probability out of range */
  ZFL_ERR_CAP = 3,          /* size cap exceeded (enumeration, trees) */
  ZFL_ERR_PARSE = 4,        /* graph6, descriptor or number syntax */
  ZFL_ERR_IO = 5,
  ZFL_ERR_PRECONDITION = 6, /* mathematical precondition violated */
  ZFL_ERR_INTERNAL = 7
} zfl_status;

typedef struct zfl_graph zfl_graph;
typedef struct zfl_poly zfl_poly;

ZFL_API const char* zfl_version(void);
ZFL_API const char* zfl_status_name(zfl_status status);
ZFL_API const char* zfl_last_error(void);
ZFL_API void zfl_string_free(char* s);

/* 0 restores the default (ZFL_THREADS, else hardware concurrency). */
ZFL_API zfl_status zfl_set_threads(size_t n);

/* ---- graphs ---- */

/* `edges` holds 2 * edge_count endpoints; duplicates are merged. */
ZFL_API zfl_status zfl_graph_from_edges(size_t n, const uint32_t* edges, size_t edge_count,
                                        zfl_graph** out);
ZFL_API zfl_status zfl_graph_from_graph6(const char* text, zfl_graph** out);
/* Descriptors such as "path:16", "grid:4x4", "hypercube:8", "wheel:10". */
ZFL_API zfl_status zfl_graph_from_family(const char* descriptor, zfl_graph** out);
ZFL_API zfl_status zfl_graph_union(const zfl_graph* a, const zfl_graph* b, zfl_graph** out);
ZFL_API zfl_status zfl_graph_join(const zfl_graph* a, const zfl_graph* b, zfl_graph** out);
ZFL_API void zfl_graph_free(zfl_graph* g);

ZFL_API size_t zfl_graph_order(const zfl_graph* g);
ZFL_API size_t zfl_graph_edge_count(const zfl_graph* g);
ZFL_API zfl_status zfl_graph_degree(const zfl_graph* g, uint32_t v, size_t* out);
ZFL_API zfl_status zfl_graph_to_graph6(const zfl_graph* g, char** out);

/* Newline-terminated graph6 lines of a corpus descriptor ("trees:7",
 * "trees:1..9", "random:12:500", a family descriptor or a file path). */
ZFL_API zfl_status zfl_corpus_graph6(const char* descriptor, uint64_t seed, char** out);

/* ---- forcing ---- */

ZFL_API zfl_status zfl_is_zfs(const zfl_graph* g, const uint32_t* set, size_t set_size, int* out);
/* {"forces":[[f,t],...],"blue":[...],"reversal":[...],"chains":[[...],...],"zero_forcing":b} */
ZFL_API zfl_status zfl_closure_json(const zfl_graph* g, const uint32_t* set, size_t set_size,
                                    char** out);
ZFL_API zfl_status zfl_zero_forcing_number(const zfl_graph* g, size_t cap, size_t* out);

/* ---- zero forcing polynomial ---- */

/* max_n = 0 uses the default cap of 24; the hard cap is 30. */
ZFL_API zfl_status zfl_poly_compute(const zfl_graph* g, size_t max_n, zfl_poly** out);
/* Closed forms for path, complete and nk1 descriptors, enumeration otherwise. */
ZFL_API zfl_status zfl_poly_from_family(const char* descriptor, size_t max_n, zfl_poly** out);
ZFL_API void zfl_poly_free(zfl_poly* poly);
ZFL_API size_t zfl_poly_order(const zfl_poly* poly);
ZFL_API zfl_status zfl_poly_coeff(const zfl_poly* poly, size_t k, char** out);
ZFL_API zfl_status zfl_poly_json(const zfl_poly* poly, char** out);
ZFL_API zfl_status zfl_poly_csv(const zfl_poly* poly, char** out);
ZFL_API zfl_status zfl_poly_prob(const zfl_poly* poly, double p, double* out);
/* p as "a/b" or a decimal; the result is an exact reduced fraction. */
ZFL_API zfl_status zfl_poly_prob_rational(const zfl_poly* poly, const char* p, char** out);

/* ---- Monte Carlo and thresholds ---- */

typedef struct zfl_mc_result {
  double p;
  double estimate;
  double ci_lo;
  double ci_hi;
  uint64_t successes;
  uint64_t samples;
  uint64_t seed;
} zfl_mc_result;

/* alpha is the miscoverage level (0.01 gives a 99% interval). Hoeffding
 * interval unless `wilson` is nonzero. */
ZFL_API zfl_status zfl_mc_prob(const zfl_graph* g, double p, uint64_t samples, uint64_t seed,
                               double alpha, int wilson, zfl_mc_result* out);

typedef enum zfl_threshold_method {
  ZFL_THRESHOLD_EXACT = 0,
  ZFL_THRESHOLD_MC = 1
} zfl_threshold_method;

typedef struct zfl_threshold_result {
  double p_hat;
  double lo; /* bisection bracket (exact) or confidence bracket (MC) */
  double hi;
  double tolerance;
  uint64_t evaluations;
  uint64_t samples;
  uint64_t seed;
  zfl_threshold_method method;
  int inconclusive;
} zfl_threshold_result;

ZFL_API zfl_status zfl_threshold_exact(const zfl_poly* poly, double tol, zfl_threshold_result* out);
ZFL_API zfl_status zfl_threshold_exact_family(const char* descriptor, double tol, size_t max_n,
                                              zfl_threshold_result* out);

typedef struct zfl_mc_threshold_options {
  uint64_t budget;    /* total samples over all probes */
  uint64_t probe_cap; /* 0 means budget / 4 */
  uint64_t batch;
  uint64_t seed;
  double tol;
  double alpha;
  int wilson;
} zfl_mc_threshold_options;

ZFL_API void zfl_mc_threshold_options_init(zfl_mc_threshold_options* options);
ZFL_API zfl_status zfl_threshold_mc(const zfl_graph* g, const zfl_mc_threshold_options* options,
                                    zfl_threshold_result* out);
/* Fails with ZFL_ERR_PRECONDITION for n < 5. */
ZFL_API zfl_status zfl_threshold_bounds_kn(size_t n, double* lo, double* hi);

/* ---- structure ---- */

/* 2-core as graph6 plus the map to original indices. With `with_set`
 * nonzero the projection of `set` is included. */
ZFL_API zfl_status zfl_core2_json(const zfl_graph* g, const uint32_t* set, size_t set_size,
                                  int with_set, char** out);
ZFL_API zfl_status zfl_pendants_json(const zfl_graph* g, char** out);

/* ---- verification and experiments ---- */

typedef struct zfl_verify_options {
  const char* claim;
  const char* corpus;
  const char* grid; /* NULL or "" for j/20, j = 1..19 */
  uint64_t seed;
  size_t max_n;
  uint64_t samples;
  size_t max_listed;
  int timing; /* include wall time in the report */
} zfl_verify_options;

ZFL_API void zfl_verify_options_init(zfl_verify_options* options);
ZFL_API zfl_status zfl_verify(const zfl_verify_options* options, char** report_json,
                              uint64_t* counterexamples);
ZFL_API zfl_status zfl_claims_json(char** out);

typedef struct zfl_experiment_options {
  const char* name;   /* figure2, orders, hypercube, clique-paths */
  const char* family; /* orders: path, cycle, wheel, complete, grid2, nk1 */
  const char* sizes;  /* comma-separated sizes, dimensions or clique orders */
  const char* grid;
  const char* method; /* orders: mc or exact */
  uint64_t samples;
  uint64_t budget;
  uint64_t seed;
  double alpha;
  double tol;
  int wilson;
  int include_mc;
  size_t path_len;
} zfl_experiment_options;

ZFL_API void zfl_experiment_options_init(zfl_experiment_options* options);
/* `summary_json` holds crossings or the per-size band verdicts. */
ZFL_API zfl_status zfl_experiment(const zfl_experiment_options* options, char** csv,
                                  char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* ZFL_ZFL_H */
