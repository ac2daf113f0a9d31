#ifndef LUCAS_FROBENIUS_H
#define LUCAS_FROBENIUS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum LfFamily {
  LF_FAMILY_S = 0,
  LF_FAMILY_T = 1,
} LfFamily;

typedef enum LfMode {
  LF_MODE_CLOSED = 0,
  LF_MODE_ORACLE = 1,
  LF_MODE_BOTH = 2,
} LfMode;

typedef enum LfStatus {
  LF_STATUS_OK = 0,
  LF_STATUS_DOMAIN_ERROR = 1,
  LF_STATUS_NOT_NUMERICAL_SEMIGROUP = 2,
  LF_STATUS_RESOURCE_ERROR = 3,
  LF_STATUS_OVERFLOW = 4,
  LF_STATUS_INTERNAL_ERROR = 5,
  LF_STATUS_NULL_POINTER = 6,
  LF_STATUS_INVALID_ARGUMENT = 7,
  LF_STATUS_BUFFER_TOO_SMALL = 8,
} LfStatus;

// Opaque family report handle.
typedef struct LfReport LfReport;

// Opaque semigroup handle.
typedef struct LfSemigroup LfSemigroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread; empty after a
// success. Valid until the next call into this library on the same thread.
const char *lf_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a pointer returned by this library and not yet freed.
void lf_string_free(char *s);

// `l_n` (n >= -1) as a decimal string.
//
// # Safety
// `out` must be valid for one pointer write.
enum LfStatus lf_lucas(int64_t n, char **out);

// `l̃_n` (n >= 0) as a decimal string.
//
// # Safety
// `out` must be valid for one pointer write.
enum LfStatus lf_lucas_tilde(int64_t n, char **out);

// `f_n` (n >= 0) as a decimal string.
//
// # Safety
// `out` must be valid for one pointer write.
enum LfStatus lf_fibonacci(int64_t n, char **out);

// Zeckendorf indices of the decimal integer `x` over `l̃ = 1, 2, 3, 4, 7, ...`,
// ascending.
//
// # Safety
// `x` must be a NUL-terminated string; `out_indices` valid for `cap`
// writes; `out_len` valid for one write.
enum LfStatus lf_decompose(const char *x,
                           uintptr_t *out_indices,
                           uintptr_t cap,
                           uintptr_t *out_len);

// Creates a semigroup from `len` generators.
//
// # Safety
// `gens` must be valid for `len` reads; `out` valid for one pointer write.
enum LfStatus lf_semigroup_new(const uint64_t *gens, uintptr_t len, struct LfSemigroup **out);

// Creates `S(a)` or `T(a)`.
//
// # Safety
// `out` must be valid for one pointer write.
enum LfStatus lf_semigroup_new_family(enum LfFamily family, uint32_t a, struct LfSemigroup **out);

// # Safety
// `sg` must be null or a live handle from `lf_semigroup_new*`.
void lf_semigroup_free(struct LfSemigroup *sg);

// Caps the residue-table size used by later queries on this handle.
//
// # Safety
// `sg` must be null or a live handle.
enum LfStatus lf_semigroup_set_table_bound(struct LfSemigroup *sg, uint64_t bound);

// Frobenius number (-1 for the naturals).
//
// # Safety
// `sg` a live handle; `out` valid for one write.
enum LfStatus lf_semigroup_frobenius(const struct LfSemigroup *sg, int64_t *out);

// # Safety
// `sg` a live handle; `out` valid for one write.
enum LfStatus lf_semigroup_genus(const struct LfSemigroup *sg, uint64_t *out);

// Number of elements below the Frobenius number.
//
// # Safety
// `sg` a live handle; `out` valid for one write.
enum LfStatus lf_semigroup_sporadic_count(const struct LfSemigroup *sg, uint64_t *out);

// # Safety
// `sg` a live handle; `out` valid for one write.
enum LfStatus lf_semigroup_multiplicity(const struct LfSemigroup *sg, uint64_t *out);

// # Safety
// `sg` a live handle; `out` valid for one write.
enum LfStatus lf_semigroup_embedding_dimension(const struct LfSemigroup *sg, uintptr_t *out);

// # Safety
// `sg` a live handle; `out` valid for one write.
enum LfStatus lf_semigroup_contains(const struct LfSemigroup *sg, int64_t x, bool *out);

// Whether `F + 1 <= e n` holds.
//
// # Safety
// `sg` a live handle; `out` valid for one write.
enum LfStatus lf_semigroup_wilf(const struct LfSemigroup *sg, bool *out);

// Minimal generators, ascending.
//
// # Safety
// `sg` a live handle; `out` valid for `cap` writes; `out_len` for one.
enum LfStatus lf_semigroup_minimal_generators(const struct LfSemigroup *sg,
                                              uint64_t *out,
                                              uintptr_t cap,
                                              uintptr_t *out_len);

// `w(0), ..., w(m-1)` for the multiplicity `m`.
//
// # Safety
// `sg` a live handle; `out` valid for `cap` writes; `out_len` for one.
enum LfStatus lf_semigroup_apery(const struct LfSemigroup *sg,
                                 uint64_t *out,
                                 uintptr_t cap,
                                 uintptr_t *out_len);

// Builds a family report. `bound` caps residue tables (0 selects the default).
//
// # Safety
// `out` must be valid for one pointer write.
enum LfStatus lf_report_new(enum LfFamily family,
                            uint32_t a,
                            enum LfMode mode,
                            uint64_t bound,
                            struct LfReport **out);

// # Safety
// `r` must be null or a live handle from `lf_report_new`.
void lf_report_free(struct LfReport *r);

// Frobenius number as a decimal string.
//
// # Safety
// `r` a live handle; `out` valid for one pointer write.
enum LfStatus lf_report_frobenius(const struct LfReport *r, char **out);

// Genus as a decimal string.
//
// # Safety
// `r` a live handle; `out` valid for one pointer write.
enum LfStatus lf_report_genus(const struct LfReport *r, char **out);

// Multiplicity as a decimal string.
//
// # Safety
// `r` a live handle; `out` valid for one pointer write.
enum LfStatus lf_report_multiplicity(const struct LfReport *r, char **out);

// # Safety
// `r` a live handle; `out` valid for one write.
enum LfStatus lf_report_embedding_dimension(const struct LfReport *r, uint64_t *out);

// # Safety
// `r` a live handle; `out` valid for one write.
enum LfStatus lf_report_wilf_ok(const struct LfReport *r, bool *out);

// Number of closed-form/oracle disagreements (0 unless mode was `Both`).
//
// # Safety
// `r` a live handle; `out` valid for one write.
enum LfStatus lf_report_mismatch_count(const struct LfReport *r, uintptr_t *out);

// The whole report as JSON, in the same shape as the CLI `family` result.
//
// # Safety
// `r` a live handle; `out` valid for one pointer write.
enum LfStatus lf_report_json(const struct LfReport *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LUCAS_FROBENIUS_H */
