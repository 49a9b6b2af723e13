/*
 * C interface to the waring library: Waring decompositions of homogeneous
 * polynomials, apolarity, and secant dimension checks.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returns a waring_status; on failure a
 * thread-local message is available from waring_last_error(). Strings returned
 * through char** out-parameters are heap allocated and released with
 * waring_string_free().
 *
 * Complex numbers cross the boundary as interleaved (re, im) double pairs.
 * Forms and decompositions also round-trip through the JSON encodings
 *   form:          {"n": int, "d": int, "coeffs": [[re, im], ...]}
 *   decomposition: {"d": int, "terms": [{"lambda": [re, im], "L": [[re, im], ...]}]}
 * with coefficients in lexicographic descending monomial order.
 */
#ifndef WARING_WARING_H
#define WARING_WARING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WARING_BUILDING_LIBRARY)
#    define WARING_API __declspec(dllexport)
#  else
#    define WARING_API __declspec(dllimport)
#  endif
#else
#  define WARING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum waring_status {
  WARING_OK = 0,
  WARING_ERR_INVALID_ARGUMENT = 1, /* malformed input, bad shapes or indices */
  WARING_ERR_PRECONDITION = 2,     /* input not general, wrong degree or variables */
  WARING_ERR_REJECTED = 3,         /* degenerate sample; resample the parameter */
  WARING_ERR_INTERNAL = 4
} waring_status;

typedef struct waring_form waring_form;
typedef struct waring_decomposition waring_decomposition;
typedef struct waring_sample waring_sample;

typedef struct waring_tolerances {
  double rank;
  double residual;
  double inclusion;
  double distinct;
  double pivot;
  double weight;
} waring_tolerances;

WARING_API const char* waring_version(void);
WARING_API const char* waring_last_error(void);
WARING_API void waring_string_free(char* s);
WARING_API waring_tolerances waring_default_tolerances(void);
/* Independent sub-stream seed for (seed, tag). */
WARING_API uint64_t waring_derive_seed(uint64_t seed, uint64_t tag);
/* JSON object with the tolerances in effect; tol may be NULL for defaults. */
WARING_API waring_status waring_tolerances_json(const waring_tolerances* tol, char** out_json);

/* ---- forms ---------------------------------------------------------------- */

WARING_API waring_status waring_form_create(int n, int d, const double* coeffs, size_t num_coeffs,
                                            waring_form** out);
WARING_API waring_status waring_form_from_json(const char* json, waring_form** out);
WARING_API waring_status waring_form_to_json(const waring_form* f, char** out_json);
WARING_API waring_status waring_form_random(int n, int d, uint64_t seed, waring_form** out);
WARING_API waring_status waring_form_synthesize(const waring_decomposition* dec, int n, waring_form** out);
WARING_API waring_status waring_form_clone(const waring_form* f, waring_form** out);
WARING_API int waring_form_n(const waring_form* f);
WARING_API int waring_form_degree(const waring_form* f);
WARING_API size_t waring_form_num_coeffs(const waring_form* f);
/* Copies 2 * num_coeffs doubles into out. */
WARING_API waring_status waring_form_coeffs(const waring_form* f, double* out, size_t capacity);
WARING_API void waring_form_free(waring_form* f);

/* ---- decompositions ------------------------------------------------------- */

WARING_API waring_status waring_decomposition_from_json(const char* json, const waring_tolerances* tol,
                                                        waring_decomposition** out);
WARING_API waring_status waring_decomposition_to_json(const waring_decomposition* dec, char** out_json);
WARING_API waring_status waring_decomposition_random(int n, int d, int h, uint64_t seed,
                                                     waring_decomposition** out);
WARING_API waring_status waring_decomposition_canonical(const waring_decomposition* dec,
                                                        waring_decomposition** out);
WARING_API int waring_decomposition_size(const waring_decomposition* dec);
WARING_API int waring_decomposition_degree(const waring_decomposition* dec);
/* Coordinatewise gap after canonical normalization and term matching. */
WARING_API waring_status waring_decomposition_distance(const waring_decomposition* a,
                                                       const waring_decomposition* b, double* out);
WARING_API waring_status waring_decomposition_residual(const waring_form* f, const waring_decomposition* dec,
                                                       double* out);
WARING_API void waring_decomposition_free(waring_decomposition* dec);

/* ---- apolarity ------------------------------------------------------------ */

/* {"n","t","d","shape","row_labels","col_labels","matrix","rank"}, matrix row-major. */
WARING_API waring_status waring_catalecticant_json(const waring_form* f, int t, const waring_tolerances* tol,
                                                   char** out_json);
/* {"n","t","dim","labels","basis"}: orthonormal basis of the apolar forms of degree t. */
WARING_API waring_status waring_apolar_space_json(const waring_form* f, int t, const waring_tolerances* tol,
                                                  char** out_json);
/* {"verdict","inclusion_defect","minimality_margin","minimality_witness"} for the forms of dec. */
WARING_API waring_status waring_verify_polyhedron(const waring_form* f, const waring_decomposition* dec,
                                                  const waring_tolerances* tol, int* verdict, char** out_json);

/* ---- decomposition algorithms --------------------------------------------- */

/* Binary forms: u has 2h - d complex coordinates. */
WARING_API waring_status waring_sylvester(const waring_form* f, int h, const double* u, size_t num_u,
                                          const waring_tolerances* tol, waring_sample** out);
/* Quadrics: pencil spanned by f and g. */
WARING_API waring_status waring_pencil(const waring_form* f, const waring_form* g, const waring_tolerances* tol,
                                       waring_sample** out);
/* Quadrics, h > n + 1 terms: extra terms plus a pencil decomposition of the remainder. */
WARING_API waring_status waring_quadric_sample(const waring_form* f, int h, const waring_decomposition* extra,
                                               const waring_form* g, const waring_tolerances* tol,
                                               waring_sample** out);
/* Plane conics, 4 terms: plane holds two functionals of 6 complex coordinates each. */
WARING_API waring_status waring_conic4(const waring_form* f, const double* plane, size_t num_plane,
                                       const waring_tolerances* tol, waring_sample** out);
/* Plane cubics, 4 terms: u has 3 complex coordinates. */
WARING_API waring_status waring_plane_cubic4(const waring_form* f, const double* u, size_t num_u,
                                             const waring_tolerances* tol, waring_sample** out);
/* Parameter u (3 complex coordinates written to out) of a 4-term plane cubic decomposition. */
WARING_API waring_status waring_plane_cubic_parameter(const waring_form* f, const waring_decomposition* dec,
                                                      double* out, size_t capacity);

/* Seeded samplers; degenerate parameters are resampled up to 16 times.
 * method: "sylvester", "pencil", "quadric", "conic", "dk"; h is ignored where fixed. */
WARING_API waring_status waring_sample_seeded(const waring_form* f, const char* method, int h, uint64_t seed,
                                              const waring_tolerances* tol, waring_sample** out);

WARING_API waring_status waring_sample_to_json(const waring_sample* s, char** out_json);
WARING_API waring_status waring_sample_decomposition(const waring_sample* s, waring_decomposition** out);
WARING_API double waring_sample_residual(const waring_sample* s);
WARING_API void waring_sample_free(waring_sample* s);

/* ---- chains and dimensions ------------------------------------------------ */

/* Keeps term keep_index and re-decomposes the remainder with seeded parameters. */
WARING_API waring_status waring_chain_step(const waring_form* f, const waring_decomposition* dec, int keep_index,
                                           uint64_t seed, const waring_tolerances* tol,
                                           waring_decomposition** out);
/* {"sequence","links"} chain of length <= 3 between two decompositions of a quadric. */
WARING_API waring_status waring_chain_connect(const waring_form* f, const waring_decomposition* a,
                                              const waring_decomposition* b, uint64_t seed,
                                              const waring_tolerances* tol, char** out_json);
/* Checks a chain certificate given as JSON; ok is 1 when every link and residual holds. */
WARING_API waring_status waring_chain_verify(const waring_form* f, const char* cert_json,
                                             const waring_tolerances* tol, int* ok, char** out_json);
WARING_API waring_status waring_tangent_dimension(const waring_form* f, const waring_decomposition* dec,
                                                  const waring_tolerances* tol, int* out);
WARING_API int waring_vsp_dim_formula(int n, int d, int h);
WARING_API int waring_expected_secant_dim(int n, int d, int h);
/* One SecantReport object: {"n","d","h","seed","expected_dim","computed_dim","defective","vsp_dim_formula"}. */
WARING_API waring_status waring_secant_report_json(int n, int d, int h, uint64_t seed, const waring_tolerances* tol,
                                                   char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* WARING_WARING_H */
