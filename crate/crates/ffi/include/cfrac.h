#ifndef CFRAC_H
#define CFRAC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum CfracStatus {
  CFRAC_STATUS_OK = 0,
  CFRAC_STATUS_NULL_POINTER = 1,
  CFRAC_STATUS_INVALID_UTF8 = 2,
  CFRAC_STATUS_PARSE = 3,
  CFRAC_STATUS_INVALID_ARGUMENT = 4,
  CFRAC_STATUS_ZERO_DENOMINATOR = 5,
  CFRAC_STATUS_DIVISION_BY_ZERO = 6,
  CFRAC_STATUS_PERFECT_SQUARE = 7,
  CFRAC_STATUS_NON_POSITIVE_RADICAND = 8,
  CFRAC_STATUS_BUDGET_EXCEEDED = 9,
  CFRAC_STATUS_NO_SOLUTION = 10,
  CFRAC_STATUS_INDEX_OUT_OF_RANGE = 11,
  CFRAC_STATUS_PANIC = 12,
} CfracStatus;

/**
 * The convergents of a continued fraction.
 */
typedef struct CfracConvergents CfracConvergents;

/**
 * A quadratic surd `(P + sqrt D) / Q`.
 */
typedef struct CfracSurd CfracSurd;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null if the last
 * call succeeded. The pointer stays valid until the next call into this
 * library on the same thread and must not be freed.
 */
const char *cfrac_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string produced by this library that has not been
 * freed yet.
 */
void cfrac_string_free(char *s);

/**
 * Continued fraction of the rational `text_in` (`"p/q"` or `"p"`), written as
 * e.g. `"[2;1,3,4]"`.
 *
 * # Safety
 * `text_in` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum CfracStatus cfrac_expand_rational(const char *text_in, char **out);

/**
 * Value of a continued fraction in bracket notation: `"p/q"` for a finite
 * one, the surd text (e.g. `"(1+√5)/2"`) for a periodic one.
 *
 * # Safety
 * `cf` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum CfracStatus cfrac_evaluate(const char *cf, char **out);

/**
 * Periodic expansion of `sqrt(n)`, e.g. `"[1;(2)]"` for `"2"`.
 *
 * # Safety
 * `n` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum CfracStatus cfrac_sqrt_cf(const char *n, char **out);

/**
 * New surd `(P + sqrt D) / Q` from decimal integer strings.
 *
 * # Safety
 * `p`, `d`, `q` must be NUL-terminated strings; `out` must be valid for
 * writes. Release the result with [`cfrac_surd_free`].
 */
enum CfracStatus cfrac_surd_new(const char *p,
                                const char *d,
                                const char *q,
                                struct CfracSurd **out);

/**
 * Surd with the given periodic expansion, e.g. `"[(1)]"`.
 *
 * # Safety
 * `cf` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum CfracStatus cfrac_periodic_to_surd(const char *cf, struct CfracSurd **out);

/**
 * # Safety
 * `s` must be null or a surd from this library that has not been freed.
 */
void cfrac_surd_free(struct CfracSurd *s);

/**
 * # Safety
 * `s` must be a live surd handle; `out` must be valid for writes.
 */
enum CfracStatus cfrac_surd_conjugate(const struct CfracSurd *s, struct CfracSurd **out);

/**
 * Periodic expansion of the surd, giving up after `max_terms` partial
 * quotients with `BudgetExceeded`.
 *
 * # Safety
 * `s` must be a live surd handle; `out` must be valid for writes.
 */
enum CfracStatus cfrac_surd_expand(const struct CfracSurd *s, size_t max_terms, char **out);

/**
 * Text such as `"(1+√5)/2"`.
 *
 * # Safety
 * `s` must be a live surd handle; `out` must be valid for writes.
 */
enum CfracStatus cfrac_surd_to_string(const struct CfracSurd *s, char **out);

/**
 * Correctly rounded decimal with `digits` fractional digits.
 *
 * # Safety
 * `s` must be a live surd handle; `out` must be valid for writes.
 */
enum CfracStatus cfrac_surd_decimal(const struct CfracSurd *s, size_t digits, char **out);

/**
 * Normalized `P`, `D`, `Q` as decimal strings.
 *
 * # Safety
 * `s` must be a live surd handle; the three outputs must be valid for
 * writes.
 */
enum CfracStatus cfrac_surd_components(const struct CfracSurd *s,
                                       char **p_out,
                                       char **d_out,
                                       char **q_out);

/**
 * The first `count` convergents of `cf`. A finite fraction with fewer
 * terms fails with `InvalidArgument`; pass 0 to take every term of a
 * finite fraction.
 *
 * # Safety
 * `cf` must be a NUL-terminated string; `out` must be valid for writes.
 * Release the result with [`cfrac_convergents_free`].
 */
enum CfracStatus cfrac_convergents_new(const char *cf, size_t count, struct CfracConvergents **out);

/**
 * Number of convergents held, 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live convergents handle.
 */
size_t cfrac_convergents_len(const struct CfracConvergents *c);

/**
 * Numerator and denominator of convergent `index`.
 *
 * # Safety
 * `c` must be a live convergents handle; both outputs must be valid for
 * writes.
 */
enum CfracStatus cfrac_convergents_get(const struct CfracConvergents *c,
                                       size_t index,
                                       char **p_out,
                                       char **q_out);

/**
 * # Safety
 * `c` must be null or a convergents handle that has not been freed.
 */
void cfrac_convergents_free(struct CfracConvergents *c);

/**
 * Smallest positive solution of `x^2 - n y^2 = ±1`; `sign_out` receives
 * the right-hand side.
 *
 * # Safety
 * `n` must be a NUL-terminated string; all outputs must be valid for
 * writes.
 */
enum CfracStatus cfrac_pell_fundamental(const char *n, char **x_out, char **y_out, int *sign_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CFRAC_H */
