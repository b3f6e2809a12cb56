#ifndef HITCALC_HITCALC_H
#define HITCALC_HITCALC_H

/*
 * C interface to libhitcalc.
 *
 * Every function returns a hitcalc_status. On failure a message is kept per
 * thread and can be read with hitcalc_last_error() until the next call on
 * the same thread. Strings returned through char** are owned by the caller
 * and released with hitcalc_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HITCALC_BUILDING_LIBRARY)
#    define HITCALC_API __declspec(dllexport)
#  else
#    define HITCALC_API __declspec(dllimport)
#  endif
#else
#  define HITCALC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hitcalc_status {
  HITCALC_OK = 0,
  HITCALC_INVALID_ARGUMENT = 1,
  HITCALC_PARSE_ERROR = 2,
  HITCALC_ARITY_MISMATCH = 3,
  HITCALC_DEGREE_MISMATCH = 4,
  HITCALC_OVERFLOW = 5,
  HITCALC_MALFORMED_CERTIFICATE = 6,
  HITCALC_IO_ERROR = 7,
  HITCALC_INTERNAL_ERROR = 99
} hitcalc_status;

typedef enum hitcalc_group {
  HITCALC_GROUP_GL = 0,
  HITCALC_GROUP_SYM = 1
} hitcalc_group;

typedef enum hitcalc_format {
  HITCALC_FORMAT_TEXT = 0,
  HITCALC_FORMAT_JSON = 1
} hitcalc_format;

/* Cohit space (F2 (x)_A P_k)_d. */
typedef struct hitcalc_cohit hitcalc_cohit;

HITCALC_API const char* hitcalc_version(void);
HITCALC_API const char* hitcalc_last_error(void);
HITCALC_API const char* hitcalc_status_name(hitcalc_status status);
HITCALC_API void hitcalc_string_free(char* s);

/* Parses poly in `vars` variables. Fails with HITCALC_DEGREE_MISMATCH
 * unless it is homogeneous. The zero polynomial sets *is_zero and leaves
 * *degree at 0. */
HITCALC_API hitcalc_status hitcalc_polynomial_degree(const char* poly,
                                                     size_t vars,
                                                     uint64_t* degree,
                                                     int* is_zero);

HITCALC_API hitcalc_status hitcalc_cohit_create(size_t vars, uint64_t degree,
                                                hitcalc_cohit** out);
HITCALC_API void hitcalc_cohit_destroy(hitcalc_cohit* space);

HITCALC_API hitcalc_status hitcalc_cohit_dim(const hitcalc_cohit* space,
                                             size_t* out);
HITCALC_API hitcalc_status hitcalc_cohit_hit_rank(const hitcalc_cohit* space,
                                                  size_t* out);
HITCALC_API hitcalc_status hitcalc_cohit_monomial_count(
    const hitcalc_cohit* space, size_t* out);
/* Basis monomials of the quotient, with the dimension summary. */
HITCALC_API hitcalc_status hitcalc_cohit_report(const hitcalc_cohit* space,
                                                hitcalc_format format,
                                                char** out);

/* Sets *is_hit to 1 or 0. The polynomial must be homogeneous of the
 * space's degree. */
HITCALC_API hitcalc_status hitcalc_cohit_is_hit(const hitcalc_cohit* space,
                                                const char* poly,
                                                int* is_hit);
/* Certificate JSON for poly; its residue is 0 exactly when poly is hit. */
HITCALC_API hitcalc_status hitcalc_cohit_certificate(
    const hitcalc_cohit* space, const char* poly, char** out);

/* Checks a certificate by polynomial arithmetic alone. *holds is 1 when
 * the identity is exact, *proves_hit is 1 when in addition the residue is
 * zero. Either pointer may be NULL. */
HITCALC_API hitcalc_status hitcalc_certificate_verify(const char* json,
                                                      int* holds,
                                                      int* proves_hit);

HITCALC_API hitcalc_status hitcalc_invariants_report(size_t vars,
                                                     uint64_t degree,
                                                     hitcalc_group group,
                                                     hitcalc_format format,
                                                     char** out,
                                                     size_t* invariant_dim);

/* Full reproduction suite. ledger_path may be NULL for the built-in
 * default. *all_pass is 1 iff every check passed. */
HITCALC_API hitcalc_status hitcalc_run_suite(size_t vars, uint64_t degree,
                                                const char* ledger_path,
                                                hitcalc_format format,
                                                char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
