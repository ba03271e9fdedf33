/*
 * gromov - classification of finite metric spaces by their minimal
 * Gromov-product structure.
 *
 * C API over the C++ core: opaque handles, status codes, and UTF-8 JSON
 * documents for structured results. Every char* returned through an out
 * parameter is heap-allocated and must be released with
 * gromov_string_free(); handles have their own _free functions. All
 * functions are thread-safe on distinct handles; the last-error message is
 * thread-local.
 */
#ifndef GROMOV_H
#define GROMOV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gromov_status {
  GROMOV_OK = 0,
  GROMOV_ERR_PARSE = 1,
  GROMOV_ERR_NOT_SYMMETRIC = 2,
  GROMOV_ERR_NONPOSITIVE_DISTANCE = 3,
  GROMOV_ERR_TRIANGLE = 4,
  GROMOV_ERR_NONGENERIC = 5,
  GROMOV_ERR_INDEX = 6,
  GROMOV_ERR_REPEATED_INDEX = 7,
  GROMOV_ERR_SIZE_MISMATCH = 8,
  GROMOV_ERR_NOT_CLOSED = 9,
  GROMOV_ERR_TOO_SMALL = 10,
  GROMOV_ERR_SIZE_LIMIT = 11,
  GROMOV_ERR_UNSUPPORTED_N = 12,
  GROMOV_ERR_REFERENCE_MISMATCH = 13,
  GROMOV_ERR_NONPOSITIVE_WEIGHT = 14,
  GROMOV_ERR_INVARIANT = 15,
  GROMOV_ERR_INVALID_ARGUMENT = 16,
  GROMOV_ERR_INTERNAL = 17
} gromov_status;

const char* gromov_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* gromov_last_error(void);

void gromov_string_free(char* s);

typedef struct gromov_metric gromov_metric;
typedef struct gromov_structure gromov_structure;
typedef struct gromov_registry gromov_registry;

void gromov_metric_free(gromov_metric* m);
void gromov_structure_free(gromov_structure* s);
void gromov_registry_free(gromov_registry* r);

/*
 * Distance-matrix input. `format` is "auto", "csv-full", "csv-lower" or
 * "json"; NULL means "auto". Entries are exact rationals: integers, "p/q",
 * or finite decimals.
 */
gromov_status gromov_metric_parse(const char* text, const char* format, gromov_metric** out);
int gromov_metric_point_count(const gromov_metric* m);

/*
 * Full analysis of one metric as a JSON document: extraction detail, the
 * 0/1 structure matrix, removed edges, pendant-free adjacency, chain/cycle
 * decomposition and all matrix invariants. Succeeds (with "generic": false
 * and the tied vertices listed) when the metric has no unique minima.
 */
gromov_status gromov_metric_analyze_json(const gromov_metric* m, char** json_out);

/* GROMOV_ERR_NONGENERIC when some minimum is tied. */
gromov_status gromov_metric_extract_structure(const gromov_metric* m, gromov_structure** out);

/*
 * Structure input: either one "i: a b" line per vertex or a JSON array of
 * [i, a, b] triples; detected by the first byte.
 */
gromov_status gromov_structure_parse(const char* text, gromov_structure** out);
int gromov_structure_point_count(const gromov_structure* s);
gromov_status gromov_structure_to_text(const gromov_structure* s, char** out);
gromov_status gromov_structure_fingerprint_json(const gromov_structure* s, char** json_out);

/* Lexicographically least relabeling; witness_json (optional) receives
 * {"witness": [images...]}. */
gromov_status gromov_structure_canonical(const gromov_structure* s, gromov_structure** canonical_out,
                                         char** witness_json_out);

/*
 * Equivalence verdict. equivalent_out is 0/1; verdict_json_out (optional)
 * receives {"equivalent", "permutation"?, "distinguishing_invariant"?,
 * "search_nodes"}.
 */
gromov_status gromov_equivalence_check(const gromov_structure* a, const gromov_structure* b,
                                       int* equivalent_out, char** verdict_json_out);

typedef void (*gromov_progress_fn)(uint64_t done, uint64_t total, void* user);

/*
 * Monte-Carlo census over random integer-weight metrics (weights uniform on
 * [1, weight_max], closed under shortest paths). weight_max = 0 selects the
 * default 2^20. The result is identical for every thread count.
 */
gromov_status gromov_census_run(int n, uint64_t samples, uint64_t seed, uint64_t weight_max,
                                int threads, gromov_progress_fn progress, void* user,
                                gromov_registry** out);

gromov_status gromov_registry_to_json(const gromov_registry* r, char** json_out);
gromov_status gromov_registry_parse_json(const char* json, gromov_registry** out);
int gromov_registry_point_count(const gromov_registry* r);
gromov_status gromov_registry_counts(const gromov_registry* r, uint64_t* classes,
                                     uint64_t* reducible, uint64_t* irreducible,
                                     uint64_t* nongeneric, uint64_t* drawn);

/*
 * Checks the bundled catalog of known classes (n = 4, 5, 6) against
 * recomputed invariants; with a registry, also checks that census classes
 * match the catalog one-to-one. ok_out is 1 iff all hard assertions hold
 * (minimal-polynomial differences are reported, not failed).
 */
gromov_status gromov_check_tables(int n, const gromov_registry* registry_or_null, int* ok_out,
                                  char** report_json_out);
gromov_status gromov_check_tables_text(int n, const gromov_registry* registry_or_null, int* ok_out,
                                       char** text_out);

#ifdef __cplusplus
}
#endif

#endif /* GROMOV_H */
