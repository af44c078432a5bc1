#ifndef COFSIEVE_H
#define COFSIEVE_H

/* Generated by cbindgen from crates/cofsieve-ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum CofStatus {
  COF_STATUS_OK = 0,
  COF_STATUS_NULL_POINTER = 1,
  COF_STATUS_INVALID_UTF8 = 2,
  // Malformed text input.
  COF_STATUS_PARSE = 3,
  // Well-formed input outside the domain of the operation.
  COF_STATUS_DOMAIN = 4,
  // A Rust panic was caught at the boundary.
  COF_STATUS_PANIC = 5,
} CofStatus;

// The outcome of a cyclic sieving verification.
typedef struct CofCspReport CofCspReport;

// A skew shape `lambda/mu`.
typedef struct CofShape CofShape;

// A symmetric polynomial with coefficients in `Z[q]`.
typedef struct CofSymPoly CofSymPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success. Valid until the
// next call on the same thread.
const char *cof_last_error(void);

// Release a string returned by this library.
//
// # Safety
// `s` must be null or a string returned through a `char **` out-parameter, not yet freed.
void cof_string_free(char *s);

// Parse a shape such as `"4,2,1/2,1"` or `"3,1"`.
//
// # Safety
// `text_in` must be a nul-terminated string and `out` valid for a pointer write.
enum CofStatus cof_shape_parse(const char *text_in, struct CofShape **out);

// # Safety
// `shape` must be null or a handle from `cof_shape_parse`, not yet freed.
void cof_shape_free(struct CofShape *shape);

// Number of cells of the shape.
//
// # Safety
// `shape` must be a live handle.
size_t cof_shape_size(const struct CofShape *shape);

// Count the coinversion-free fillings with entries in `1..=m`.
//
// # Safety
// `shape` must be a live handle and `out` valid for a write.
enum CofStatus cof_count_fillings(const struct CofShape *shape, size_t m, uint64_t *out);

// `E_{shape}(x_1..x_m; q, 0)` in the monomial basis.
//
// # Safety
// `shape` must be a live handle and `out` valid for a pointer write.
enum CofStatus cof_macdonald_e(const struct CofShape *shape, size_t m, struct CofSymPoly **out);

// The same polynomial in the Schur basis, as a new handle.
//
// # Safety
// `poly` must be a live handle and `out` valid for a pointer write.
enum CofStatus cof_sympoly_to_schur(const struct CofSymPoly *poly, struct CofSymPoly **out);

// Text form, e.g. `"s[2,1] + q*s[1,1,1]"`.
//
// # Safety
// `poly` must be a live handle and `out` valid for a pointer write.
enum CofStatus cof_sympoly_to_string(const struct CofSymPoly *poly, char **out);

// JSON form `{"basis", "m", "terms"}`.
//
// # Safety
// `poly` must be a live handle and `out` valid for a pointer write.
enum CofStatus cof_sympoly_to_json(const struct CofSymPoly *poly, char **out);

// # Safety
// `poly` must be null or a live handle, not yet freed.
void cof_sympoly_free(struct CofSymPoly *poly);

// `K_{lambda mu}(q)` as text, partitions given as `"4,2,1"`.
//
// # Safety
// `lambda` and `mu` must be nul-terminated strings and `out` valid for a pointer write.
enum CofStatus cof_kostka_foulkes(const char *lambda, const char *mu, char **out);

// Verify that `E_{n base}(1^m; q, 0)` sieves `COF(n base, m)` under the block rotation.
//
// # Safety
// `base` must be a live handle and `out` valid for a pointer write.
enum CofStatus cof_csp_main(const struct CofShape *base,
                            size_t n,
                            size_t m,
                            struct CofCspReport **out);

// Verify the content-refined statement for content such as `"8,2,2"`.
//
// # Safety
// `base` must be a live handle, `content` a nul-terminated string and `out` valid for a
// pointer write.
enum CofStatus cof_csp_refined(const struct CofShape *base,
                               size_t n,
                               const char *content,
                               struct CofCspReport **out);

// 1 when every check passed, 0 otherwise (including a null handle).
//
// # Safety
// `report` must be null or a live handle.
int cof_csp_report_passed(const struct CofCspReport *report);

// The report as JSON.
//
// # Safety
// `report` must be a live handle and `out` valid for a pointer write.
enum CofStatus cof_csp_report_to_json(const struct CofCspReport *report, char **out);

// # Safety
// `report` must be null or a live handle, not yet freed.
void cof_csp_report_free(struct CofCspReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COFSIEVE_H */
