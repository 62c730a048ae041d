/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef QGONAL_H
#define QGONAL_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Family codes accepted by `qg_partition_count`.
typedef enum QgFamily {
  QG_FAMILY_UNRESTRICTED = 0,
  QG_FAMILY_DISTINCT = 1,
  // Parts congruent to `r` mod `m`.
  QG_FAMILY_RESIDUE = 2,
  // Parts congruent to 0, 1 or `m - 1` mod `m`.
  QG_FAMILY_P_PRIME = 3,
  QG_FAMILY_P25P35 = 4,
  QG_FAMILY_P15P45 = 5,
} QgFamily;

// Variant codes accepted by `qg_series_rr_sum`.
typedef enum QgRrVariant {
  // `sum q^(n^2) / (q;q)_n`
  QG_RR_VARIANT_FIRST = 1,
  // `sum q^(n^2+n) / (q;q)_n`
  QG_RR_VARIANT_SECOND = 2,
} QgRrVariant;

// Outcome of a call.
typedef enum QgStatus {
  QG_STATUS_OK = 0,
  QG_STATUS_NULL_POINTER = 1,
  QG_STATUS_INVALID_ARGUMENT = 2,
  QG_STATUS_NOT_INVERTIBLE = 3,
  QG_STATUS_OUT_OF_RANGE = 4,
  QG_STATUS_INEXACT_DIVISION = 5,
  QG_STATUS_INVALID_UTF8 = 6,
  QG_STATUS_PANIC = 7,
} QgStatus;

// Result of verifying one identity.
typedef struct QgReport QgReport;

// Truncated power series with big-integer coefficients.
typedef struct QgSeries QgSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *qg_last_error_message(void);

// Releases a string returned by this library. NULL is ignored.
void qg_string_free(char *s);

// Product of `(1 - q^e)` over every `e ≡ offsets[i] (mod moduli[i])`,
// `e >= 1`, truncated at `order`. Requires `1 <= offsets[i] <= moduli[i]`.
enum QgStatus qg_series_pochhammer(const uint64_t *offsets,
                                   const uint64_t *moduli,
                                   size_t len,
                                   uint64_t order,
                                   struct QgSeries **out);

// `1 + sum_k (-1)^k (q^{P_{g,k}} + q^{Q_{g,k}})` truncated at `order`.
enum QgStatus qg_series_gonal(uint64_t g, uint64_t order, struct QgSeries **out);

// The triple product whose expansion is the `g`-gonal sign series.
enum QgStatus qg_series_theorem1_lhs(uint64_t g, uint64_t order, struct QgSeries **out);

// Rogers-Ramanujan sum side truncated at `order`; `variant` is a `QgRrVariant`.
enum QgStatus qg_series_rr_sum(uint32_t variant, uint64_t order, struct QgSeries **out);

// `a + b` at the smaller of the two orders.
enum QgStatus qg_series_add(const struct QgSeries *a,
                            const struct QgSeries *b,
                            struct QgSeries **out);

// `a - b` at the smaller of the two orders.
enum QgStatus qg_series_sub(const struct QgSeries *a,
                            const struct QgSeries *b,
                            struct QgSeries **out);

// `a * b` at the smaller of the two orders.
enum QgStatus qg_series_mul(const struct QgSeries *a,
                            const struct QgSeries *b,
                            struct QgSeries **out);

// `1 / a`; fails with `QG_STATUS_NOT_INVERTIBLE` unless the constant term is 1.
enum QgStatus qg_series_invert(const struct QgSeries *a, struct QgSeries **out);

enum QgStatus qg_series_order(const struct QgSeries *s, uint64_t *out);

// Coefficient of `q^n` as a decimal string; 0 for negative `n`, an error
// past the order.
enum QgStatus qg_series_coefficient(const struct QgSeries *s, int64_t n, char **out);

// Lowest exponent where `a` and `b` differ within the common order, or -1.
enum QgStatus qg_series_first_mismatch(const struct QgSeries *a,
                                       const struct QgSeries *b,
                                       int64_t *out);

void qg_series_free(struct QgSeries *s);

// Number of partitions of `n` in `family` (a `QgFamily` code); `r` and `m`
// are read only by the families that take them.
enum QgStatus qg_partition_count(uint32_t family, uint64_t r, uint64_t m, uint64_t n, char **out);

// Sum of the divisors of `n >= 1` that are congruent to 0, 1 or `m - 1` mod `m`.
enum QgStatus qg_sigma_prime(uint64_t m, uint64_t n, char **out);

// Coefficient of `q^n` in the `g`-gonal sign series: -1, 0 or 1.
enum QgStatus qg_e_coeff(uint64_t g, uint64_t n, int8_t *out);

// Verifies identity `id` (for example `"THEOREM1"`) up to `order`. `g` and
// `m` are ignored when 0.
enum QgStatus qg_verify(const char *id,
                        uint64_t g,
                        uint64_t m,
                        uint64_t order,
                        struct QgReport **out);

enum QgStatus qg_report_is_verified(const struct QgReport *r, bool *out);

// The report as a JSON object with keys `identity`, `params`, `order`,
// `status` and `first_mismatch`.
enum QgStatus qg_report_json(const struct QgReport *r, char **out);

void qg_report_free(struct QgReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QGONAL_H */
