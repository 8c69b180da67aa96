/*
 * ruled -- exact intersection theory, sheaf-invariant bookkeeping,
 * polarization construction, splitting-type strata, and moduli-dimension
 * audits on blown-up ruled surfaces.
 *
 * C API of the shared library.  Surfaces are opaque handles; divisor classes
 * are arrays of long long in the fixed basis (sigma, f, E_1..E_n) whose
 * length must equal the Picard rank of the surface.  Every fallible call
 * returns a ruled_status; outputs are written through pointers only on
 * RULED_OK.  All operations are pure and thread-safe; handles are immutable
 * after creation.
 */

#ifndef RULED_H
#define RULED_H

#include <stddef.h>

#if defined(_WIN32)
#define RULED_API __declspec(dllexport)
#else
#define RULED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ruled_status {
  RULED_OK = 0,
  RULED_ERR_UNSUPPORTED_SURFACE = 1, /* e < 0, genus < 0, or base-case-only op */
  RULED_ERR_DIMENSION_MISMATCH = 2,  /* coordinate length != Picard rank */
  RULED_ERR_NO_BLOWDOWN = 3,         /* surface is geometrically ruled */
  RULED_ERR_NOT_NORMALIZED = 4,      /* degree outside [0, rank) */
  RULED_ERR_RANK = 5,                /* rank below the operation's minimum */
  RULED_ERR_WINDOW = 6,              /* enumeration window misses a checked type */
  RULED_ERR_PARSE = 7,               /* malformed config text */
  RULED_ERR_DIRECTION = 8,           /* twist direction vs. surface mismatch */
  RULED_ERR_ARGUMENT = 9,            /* null pointer or invalid value */
  RULED_ERR_INTERNAL = 10
} ruled_status;

typedef enum ruled_format {
  RULED_FORMAT_TEXT = 0,
  RULED_FORMAT_JSON_LINES = 1
} ruled_format;

typedef enum ruled_ample {
  RULED_NOT_AMPLE = 0,
  RULED_AMPLE = 1,
  RULED_NECESSARY_CHECKS_PASSED = 2
} ruled_ample;

typedef struct ruled_surface ruled_surface;

/* Sheaf class view: rank >= 1, c1 of length c1_len, integer c2. */
typedef struct ruled_chern_view {
  long long rank;
  const long long* c1;
  size_t c1_len;
  long long c2;
} ruled_chern_view;

RULED_API const char* ruled_version(void);
RULED_API const char* ruled_status_str(ruled_status status);

/* ---- surfaces ---------------------------------------------------------- */

/* Geometrically ruled surface of the given genus and invariant e >= 0, blown
 * up `blowups` times at general points. */
RULED_API ruled_status ruled_surface_create(long long genus, long long e,
                                            long long blowups, ruled_surface** out);
RULED_API ruled_status ruled_surface_blow_up(const ruled_surface* s, ruled_surface** out);
RULED_API ruled_status ruled_surface_blow_down(const ruled_surface* s, ruled_surface** out);
RULED_API void ruled_surface_free(ruled_surface* s);

/* Accessors return -1 on a null handle. */
RULED_API long long ruled_surface_genus(const ruled_surface* s);
RULED_API long long ruled_surface_e_invariant(const ruled_surface* s);
RULED_API long long ruled_surface_blowup_count(const ruled_surface* s);
RULED_API long long ruled_surface_picard_rank(const ruled_surface* s);

/* ---- lattice ----------------------------------------------------------- */

RULED_API ruled_status ruled_intersect(const ruled_surface* s, const long long* a,
                                       size_t a_len, const long long* b, size_t b_len,
                                       long long* out);
RULED_API ruled_status ruled_canonical_class(const ruled_surface* s, long long* out,
                                             size_t out_len);
RULED_API ruled_status ruled_fiber_class(const ruled_surface* s, long long* out,
                                         size_t out_len);
RULED_API ruled_status ruled_section_class(const ruled_surface* s, long long* out,
                                           size_t out_len);
/* Drops the last exceptional coordinate; out_len must be d_len - 1. */
RULED_API ruled_status ruled_pushforward_class(const ruled_surface* s, const long long* d,
                                               size_t d_len, long long* out,
                                               size_t out_len);
/* Appends a zero coordinate; out_len must be d_len + 1. */
RULED_API ruled_status ruled_pullback_class(const long long* d, size_t d_len,
                                            long long* out, size_t out_len);

/* ---- sheaf invariants --------------------------------------------------- */

/* Twist by a line-bundle class; c1_out has the same length as c.c1. */
RULED_API ruled_status ruled_chern_of_twist(const ruled_surface* s, ruled_chern_view c,
                                            const long long* line, size_t line_len,
                                            long long* c1_out, size_t c1_out_len,
                                            long long* c2_out);
RULED_API ruled_status ruled_euler_char(const ruled_surface* s, ruled_chern_view c,
                                        long long* out);
RULED_API ruled_status ruled_euler_pairing(const ruled_surface* s, ruled_chern_view a,
                                           ruled_chern_view b, long long* out);
RULED_API ruled_status ruled_discriminant(const ruled_surface* s, ruled_chern_view c,
                                          long long* out);
/* Exact slope (H.c1)/rank as a reduced fraction with positive denominator. */
RULED_API ruled_status ruled_slope(const ruled_surface* s, const long long* h,
                                   size_t h_len, ruled_chern_view c, long long* num,
                                   long long* den);
RULED_API ruled_status ruled_stack_dim(const ruled_surface* s, ruled_chern_view c,
                                       long long* out);
RULED_API ruled_status ruled_moduli_dims(const ruled_surface* s, ruled_chern_view c,
                                         long long* dim_stable, long long* m,
                                         int* unirational);

/* ---- polarization ------------------------------------------------------- */

RULED_API ruled_status ruled_construct_polarization(const ruled_surface* s,
                                                    long long* h_out, size_t h_out_len);
/* The exact integer H.(K_S+f); the caller tests the sign. */
RULED_API ruled_status ruled_hypothesis_value(const ruled_surface* s, const long long* h,
                                              size_t h_len, long long* out);
RULED_API ruled_status ruled_is_ample(const ruled_surface* s, const long long* h,
                                      size_t h_len, int* verdict);

/* ---- splitting-type strata on P^1 --------------------------------------- */

/* dim Ext^1(F,F) for a splitting type (weakly decreasing parts) with
 * `torsion_points` distinct reduced torsion points. */
RULED_API ruled_status ruled_stratum_codim(const long long* parts, size_t parts_len,
                                           long long torsion_points, long long* out);
/* 1 in *pass when the stratification check succeeds for rank r, degree -d. */
RULED_API ruled_status ruled_strata_check(long long rank, long long d,
                                          long long min_part, int* pass);

/* ---- commands ------------------------------------------------------------
 * Config text goes in; the rendered report comes out as a malloc'd string
 * (release it with ruled_string_free).  *exit_code follows the CLI
 * convention: 0 ok, 2 hypothesis H.(K_S+f) < 0 fails, 3 audit/check failure,
 * 4 input error.  The functions return RULED_OK whenever the command ran,
 * including runs that end with a nonzero exit code. */

RULED_API ruled_status ruled_cmd_surface_check(const char* config_text, char** out,
                                               int* exit_code);
RULED_API ruled_status ruled_cmd_polarize(const char* config_text, char** out,
                                          int* exit_code);
RULED_API ruled_status ruled_cmd_reduce(const char* config_text, ruled_format format,
                                        char** out, int* exit_code);
RULED_API ruled_status ruled_cmd_report(const char* config_text, ruled_format format,
                                        char** out, int* exit_code);
RULED_API ruled_status ruled_cmd_strata(long long rank, long long d, long long min_part,
                                        ruled_format format, char** out, int* exit_code);
RULED_API void ruled_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RULED_H */
