#ifndef PLUMB_PLUMB_H
#define PLUMB_PLUMB_H

/* C interface to libplumb. Handles are opaque; every call returns a status and, on failure,
   leaves a message readable through plumb_last_error() on the calling thread. Strings
   returned through char** are owned by the caller and released with plumb_string_free(). */

#include <stddef.h>

#if defined(__GNUC__)
#define PLUMB_API __attribute__((visibility("default")))
#else
#define PLUMB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plumb_status {
  PLUMB_OK = 0,
  PLUMB_E_INVALID_ARGUMENT = 1,
  PLUMB_E_PARSE = 2,
  PLUMB_E_NOT_NEGATIVE_DEFINITE = 3,
  PLUMB_E_NO_INTERNAL_VERTICES = 4,
  PLUMB_E_UNSUPPORTED = 5,
  PLUMB_E_INSUFFICIENT_TRUNCATION = 6,
  PLUMB_E_NOT_SLIM = 7,
  PLUMB_E_INTERNAL = 8,
  PLUMB_E_IO = 9
} plumb_status;

typedef enum plumb_method { PLUMB_METHOD_DIRECT = 0, PLUMB_METHOD_NESTED = 1 } plumb_method;

typedef struct plumb_graph plumb_graph;
typedef struct plumb_series plumb_series;

PLUMB_API const char* plumb_last_error(void);
/* Line and column of the last parse error (0 when not a parse error). */
PLUMB_API void plumb_last_error_location(size_t* line, size_t* column);

PLUMB_API plumb_status plumb_graph_parse(const char* text, plumb_graph** out);
PLUMB_API plumb_status plumb_graph_load(const char* path, plumb_graph** out);
PLUMB_API void plumb_graph_free(plumb_graph* g);

/* JSON object: counts, degree partition, centers, rooting, definiteness, det W and S.
   *negative_definite is set to 1 or 0. */
PLUMB_API plumb_status plumb_graph_report(const plumb_graph* g, char** json, int* negative_definite);

/* order is an exact rational ("20", "7/2"); threads = 0 uses all cores (capped by PLUMB_THREADS). */
PLUMB_API plumb_status plumb_zhat(const plumb_graph* g, const char* order, plumb_method method, unsigned threads,
                                  plumb_series** out);
PLUMB_API plumb_status plumb_series_to_json(const plumb_series* s, char** json);
/* Compares the coefficients up to the smaller of the two orders. */
PLUMB_API plumb_status plumb_series_equal(const plumb_series* a, const plumb_series* b, int* equal);
PLUMB_API void plumb_series_free(plumb_series* s);

/* suite: star | tree | felder | defrag | all. m, depth <= 0 select the defaults.
   *report is a JSON array of {"suite","case","passed","detail"}; *all_passed is 1 or 0. */
PLUMB_API plumb_status plumb_verify(const char* suite, int m, int depth, char** report, int* all_passed);

/* DOT text for a constructor spec such as "hypercube m=2", "fragment lambda=+ depth=6",
   "product lambda=+ mu=-", "base depth=8", "bilateral lambda=- h=-1 depth=6". */
PLUMB_API plumb_status plumb_dag_dot(const char* spec, char** dot);

PLUMB_API void plumb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
