#ifndef SIGNEDSPEC_H
#define SIGNEDSPEC_H

#include <stddef.h>

#if defined(SSG_BUILDING_LIBRARY)
#define SSG_API __attribute__((visibility("default")))
#else
#define SSG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ssg_graph ssg_graph;

typedef enum ssg_status {
  SSG_OK = 0,
  SSG_INVALID_ARGUMENT = 1,
  SSG_PARSE_ERROR = 2,
  SSG_VERIFICATION_FAILED = 3,
  SSG_INTERNAL_ERROR = 4
} ssg_status;

typedef struct ssg_edge {
  int u; /* 1-based */
  int v;
  int sign; /* +1 or -1 */
} ssg_edge;

/* Message for the last failing call on this thread ("" if none). */
SSG_API const char* ssg_last_error(void);
SSG_API const char* ssg_status_string(ssg_status status);

SSG_API ssg_status ssg_graph_from_edges(int n, const ssg_edge* edges, size_t count, ssg_graph** out);

/* family: "cycle", "path", "kmr", "mixed" or "star"; params as on the command
 * line, e.g. "8 2 3", "4 -1", "5 1,-1,1,1" or "1,2,3". */
SSG_API ssg_status ssg_graph_from_family(const char* family, const char* params, ssg_graph** out);

/* Edge-list text: "n <count>", then "u v +1|-1" lines; '#' comments. */
SSG_API ssg_status ssg_graph_from_edge_list(const char* text, ssg_graph** out);

SSG_API void ssg_graph_free(ssg_graph* g);

SSG_API int ssg_graph_order(const ssg_graph* g);
SSG_API size_t ssg_graph_edge_count(const ssg_graph* g);
/* Sign of edge {u, v}: -1, 0 or +1; 0 also for out-of-range vertices. */
SSG_API int ssg_graph_sign(const ssg_graph* g, int u, int v);

/* The negated graph carries no family tag. */
SSG_API ssg_status ssg_graph_negate(const ssg_graph* g, ssg_graph** out);

/* Strings returned through char** are released with ssg_string_free. */
SSG_API ssg_status ssg_graph_to_edge_list(const ssg_graph* g, char** out);

/* JSON result document. Family-tagged graphs use the closed forms, others the
 * exact engine. verify != 0 cross-checks against the oracles; a mismatch
 * returns SSG_VERIFICATION_FAILED with both coefficient arrays in
 * ssg_last_error(). */
SSG_API ssg_status ssg_graph_analyze(const ssg_graph* g, int verify, char** json_out);

/* Verification sweep. max_n <= 0 selects the default range; inject_fault may
 * be NULL. *all_passed is set to 1 or 0. */
SSG_API ssg_status ssg_sweep(int max_n, const char* inject_fault, int* all_passed, char** report_out);

SSG_API void ssg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
