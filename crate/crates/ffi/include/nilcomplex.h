#ifndef NILCOMPLEX_H
#define NILCOMPLEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NcStatus {
  NC_STATUS_OK = 0,
  NC_STATUS_NULL_POINTER = 1,
  NC_STATUS_INVALID_UTF8 = 2,
  NC_STATUS_PARSE = 3,
  NC_STATUS_DOMAIN = 4,
  NC_STATUS_ALARM = 5,
  /**
   * The answer is not known for this structure.
   */
  NC_STATUS_UNSUPPORTED = 6,
  NC_STATUS_PANIC = 7,
} NcStatus;

/**
 * Opaque handle to a complex structure.
 */
typedef struct NcStructure NcStructure;

/**
 * Flags of one Hermitian metric.
 */
typedef struct NcMetricFlags {
  bool balanced;
  bool gauduchon;
  bool strongly_gauduchon;
} NcMetricFlags;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses complex structure equations such as `dw1=0; dw2=0; dw3=w1^w2`.
 *
 * # Safety
 * `equations` must be a nul-terminated string; `out` must be writable.
 */
enum NcStatus nc_structure_from_equations(const char *equations, struct NcStructure **out);

/**
 * Two-step family with rational `lambda` and Gaussian-rational `d`.
 *
 * # Safety
 * String arguments must be nul-terminated; `out` must be writable.
 */
enum NcStatus nc_structure_two_step(uint8_t rho,
                                    const char *lambda,
                                    const char *d,
                                    struct NcStructure **out);

/**
 * Three-step family with Gaussian-rational `b` and rational `c`.
 *
 * # Safety
 * String arguments must be nul-terminated; `out` must be writable.
 */
enum NcStatus nc_structure_three_step(uint8_t rho,
                                      const char *b,
                                      const char *c,
                                      struct NcStructure **out);

/**
 * Non-nilpotent family; `positive` selects the sign.
 *
 * # Safety
 * `out` must be writable.
 */
enum NcStatus nc_structure_non_nilpotent(uint8_t eps, bool positive, struct NcStructure **out);

/**
 * # Safety
 * `s` must come from a constructor above and not be freed twice.
 */
void nc_structure_free(struct NcStructure *s);

/**
 * Name of the underlying Lie algebra, e.g. "h12". Free with `nc_string_free`.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum NcStatus nc_classify(const struct NcStructure *s, char **out);

/**
 * Dolbeault numbers h^{p,q} into `out[4*p + q]` (16 entries).
 *
 * # Safety
 * `s` must be a live handle; `out` must hold 16 values.
 */
enum NcStatus nc_hodge(const struct NcStructure *s, uint32_t *out);

/**
 * Betti numbers b_0..b_6 (7 entries).
 *
 * # Safety
 * `s` must be a live handle; `out` must hold 7 values.
 */
enum NcStatus nc_betti(const struct NcStructure *s, uint32_t *out);

/**
 * dim E_r^{p,q} into `out[4*p + q]` for 1 ≤ r ≤ 4.
 *
 * # Safety
 * `s` must be a live handle; `out` must hold 16 values.
 */
enum NcStatus nc_frolicher_dims(const struct NcStructure *s, uint32_t r, uint32_t *out);

/**
 * Least r with E_r = E_∞.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum NcStatus nc_degeneration_step(const struct NcStructure *s, uint32_t *out);

/**
 * Behaviour signature such as "E1≅E2≇E3≅E∞". Free with `nc_string_free`.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum NcStatus nc_behaviour(const struct NcStructure *s, char **out);

/**
 * Flags of the metric `r2,s2,t2,u,v,z`.
 *
 * # Safety
 * `s` must be a live handle, `metric` nul-terminated, `out` writable.
 */
enum NcStatus nc_metric_flags(const struct NcStructure *s,
                              const char *metric,
                              struct NcMetricFlags *out);

/**
 * Whether the structure admits a strongly Gauduchon metric. Only structures
 * built from a family are supported.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum NcStatus nc_sg_exists(const struct NcStructure *s, bool *out);

/**
 * Full JSON report, in the CLI schema. Free with `nc_string_free`.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum NcStatus nc_report_json(const struct NcStructure *s, char **out);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void nc_string_free(char *s);

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *nc_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NILCOMPLEX_H */
