/*
 * C interface to libs3cover.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Strings returned through char** out-parameters are NUL-terminated JSON
 * owned by the caller and released with s3c_string_free. On any status other
 * than S3C_OK or S3C_CHECK_FAILED, out-parameters are left untouched and
 * s3c_last_error() describes the failure (thread-local).
 */
#ifndef S3COVER_H
#define S3COVER_H

#include <stddef.h>

#if defined(_WIN32)
#define S3C_API __declspec(dllexport)
#else
#define S3C_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum s3c_status {
  S3C_OK = 0,
  /* The computation ran and the property it checks does not hold. */
  S3C_CHECK_FAILED = 1,
  S3C_BAD_INPUT = 2,
  /* A table is not of the cover form. */
  S3C_SHAPE_MISMATCH = 3,
  S3C_INTERNAL = 4
} s3c_status;

typedef struct s3c_params s3c_params;
typedef struct s3c_table s3c_table;
typedef struct s3c_building_data s3c_building_data;

#define S3C_MINORS_NONZERO 1u
#define S3C_MINORS_DEDUP 2u

S3C_API const char *s3c_version(void);
S3C_API const char *s3c_last_error(void);
S3C_API void s3c_string_free(char *s);

/* Parameters (a..h). */
S3C_API s3c_status s3c_params_parse(const char *json, s3c_params **out);
/* values: eight strings "p" or "p/q" in the order a..h. */
S3C_API s3c_status s3c_params_from_strings(const char *const values[8], s3c_params **out);
S3C_API s3c_status s3c_params_to_json(const s3c_params *p, char **out);
S3C_API void s3c_params_free(s3c_params *p);

/* Constraint residuals; S3C_CHECK_FAILED when any residual is nonzero. */
S3C_API s3c_status s3c_check(const s3c_params *p, char **report);

/* Multiplication tables. */
S3C_API s3c_status s3c_build(const s3c_params *p, s3c_table **out);
S3C_API s3c_status s3c_table_parse(const char *json, s3c_table **out);
S3C_API s3c_status s3c_table_to_json(const s3c_table *t, char **out);
S3C_API void s3c_table_free(s3c_table *t);
/* Unit, commutativity, associativity and equivariance with witnesses. */
S3C_API s3c_status s3c_verify(const s3c_table *t, char **report);
/* Entry-by-entry comparison; S3C_CHECK_FAILED on any difference. */
S3C_API s3c_status s3c_table_compare(const s3c_table *expected, const s3c_table *actual,
                                     char **report);
/* S3C_SHAPE_MISMATCH when the table is not of cover form. */
S3C_API s3c_status s3c_extract_params(const s3c_table *t, s3c_params **out);

/* Building data with A1/A2 residuals and the reconstruction comparison;
 * S3C_CHECK_FAILED when the data is outside the kernel of the testers. */
S3C_API s3c_status s3c_building_data_report(const s3c_params *p, char **report);
S3C_API s3c_status s3c_building_data_parse(const char *json, s3c_building_data **out);
S3C_API s3c_status s3c_building_data_to_json(const s3c_building_data *bd, char **out);
S3C_API void s3c_building_data_free(s3c_building_data *bd);
S3C_API s3c_status s3c_reconstruct(const s3c_building_data *bd, s3c_table **out);

/* change_json: {"u": .., "C": [[l1, m1], [l2, m2]]}. S3C_BAD_INPUT when
 * singular; S3C_CHECK_FAILED when the covariance check fails. */
S3C_API s3c_status s3c_basis_change(const s3c_params *p, const char *change_json,
                                    char **report);

/* All 3003 5x5 minors (flags: S3C_MINORS_*), fanned out over `jobs` threads. */
S3C_API s3c_status s3c_ramification(const s3c_params *p, unsigned flags, unsigned jobs,
                                    char **out);
/* rows: five distinct 1-based indices in 1..15. */
S3C_API s3c_status s3c_minor(const s3c_params *p, const int rows[5], char **out);

S3C_API s3c_status s3c_search(long bound, int include_degenerate, unsigned jobs, char **out);

/* Group-ring and projector identities. */
S3C_API s3c_status s3c_selftest(char **report);

#ifdef __cplusplus
}
#endif

#endif /* S3COVER_H */
