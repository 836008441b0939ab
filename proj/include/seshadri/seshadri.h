#ifndef SESHADRI_H
#define SESHADRI_H

/*
 * C interface to the Seshadri constant toolkit.
 *
 * Every function returns a sesh_status. Results come back as JSON text in a
 * buffer owned by the caller, released with sesh_string_free. On failure the
 * calling thread's sesh_last_error() holds a diagnostic until its next call.
 * All numbers inside the JSON are exact strings ("3/2") or root records
 * ({"root": {"radicand": "3", "index": 2}}).
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SESH_API __attribute__((visibility("default")))
#else
#define SESH_API
#endif

typedef enum sesh_status {
    SESH_OK = 0,
    SESH_ERR_INVALID_ARGUMENT = 1,
    SESH_ERR_PARSE = 2,
    SESH_ERR_DIMENSION_MISMATCH = 3,
    SESH_ERR_DEGENERATE_SLICE = 4,
    SESH_ERR_VALUE_MISMATCH = 5,
    SESH_ERR_NOT_FANO = 6,
    SESH_ERR_UNSUPPORTED = 7,
    SESH_ERR_INTERNAL = 8
} sesh_status;

typedef enum sesh_format {
    SESH_FORMAT_JSON = 0,
    SESH_FORMAT_TEXT = 1
} sesh_format;

typedef struct sesh_polytope sesh_polytope;
typedef struct sesh_strategy sesh_strategy;

SESH_API const char* sesh_version(void);
SESH_API const char* sesh_status_name(sesh_status status);
SESH_API const char* sesh_last_error(void);
SESH_API void sesh_string_free(char* s);

/* Polytopes: {"rank": n, "vertices": [["p/q", ...], ...]}. Vertices are
   stored sorted lexicographically; vertex indices refer to that order. */
SESH_API sesh_status sesh_polytope_from_json(const char* json, sesh_polytope** out);
SESH_API sesh_status sesh_polytope_to_json(const sesh_polytope* p, char** out);
SESH_API size_t sesh_polytope_rank(const sesh_polytope* p);
SESH_API size_t sesh_polytope_vertex_count(const sesh_polytope* p);
SESH_API void sesh_polytope_free(sesh_polytope* p);

/* Search strategy. Unset fields take the per-rank defaults of the polytope
   being searched. A NULL strategy means all defaults. */
SESH_API sesh_status sesh_strategy_new(sesh_strategy** out);
SESH_API void sesh_strategy_free(sesh_strategy* s);
/* height 0 restricts candidates to facet normals. */
SESH_API sesh_status sesh_strategy_set_box(sesh_strategy* s, int height);
SESH_API sesh_status sesh_strategy_set_max_depth(sesh_strategy* s, int depth);
SESH_API sesh_status sesh_strategy_set_memoize(sesh_strategy* s, int enabled);
SESH_API sesh_status sesh_strategy_set_threads(sesh_strategy* s, unsigned threads);

/* Toric bounds. */
SESH_API sesh_status sesh_estimate_interior(const sesh_polytope* p, const sesh_strategy* s, char** out);
SESH_API sesh_status sesh_bound_at_face(const sesh_polytope* p, const size_t* vertex_indices, size_t count,
                                        const sesh_strategy* s, char** out);
SESH_API sesh_status sesh_orbit_profile(const sesh_polytope* p, const sesh_strategy* s, char** out);
/* On success *out is {"value": "..."}; a certificate that does not hold
   returns DIMENSION_MISMATCH, DEGENERATE_SLICE or VALUE_MISMATCH. */
SESH_API sesh_status sesh_verify_certificate(const sesh_polytope* p, const char* certificate_json, char** out);

/* Hypersurfaces and complete intersections. Integers are decimal strings. */
SESH_API sesh_status sesh_hypersurface(unsigned n, const char* degree, const char* const* weights, size_t count,
                                       char** out);
SESH_API sesh_status sesh_complete_intersection(unsigned n, const char* const* degrees, size_t count, char** out);
SESH_API sesh_status sesh_fano_table(sesh_format format, char** out);

/* Reproduction fixtures. fixtures_json NULL runs the built-in set; filter
   NULL or "" runs everything. *all_passed is set even when fixtures fail. */
SESH_API sesh_status sesh_builtin_fixtures(char** out);
SESH_API sesh_status sesh_verify_fixtures(const char* fixtures_json, const char* filter, char** out,
                                          int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
