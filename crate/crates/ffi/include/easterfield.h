#ifndef EASTERFIELD_H
#define EASTERFIELD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum EfStatus {
  EF_STATUS_OK = 0,
  EF_STATUS_NULL_POINTER = 1,
  EF_STATUS_INVALID_ARGUMENT = 2,
  EF_STATUS_CAP_EXCEEDED = 3,
  EF_STATUS_INVALID_GROUP = 4,
  EF_STATUS_NOT_NILPOTENT = 5,
  EF_STATUS_INTERNAL = 6,
} EfStatus;

/**
 * Opaque handle to a validated group.
 */
typedef struct EfGroup EfGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds `K(p, r)`.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum EfStatus ef_easterfield(uint64_t p, uint32_t r, struct EfGroup **out);

/**
 * Builds the subgroup `⟨y, x1, …, x_{p-1}⟩` of `K(p, r)` as a group.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum EfStatus ef_easterfield_subgroup(uint64_t p, uint32_t r, struct EfGroup **out);

/**
 * Builds the dihedral group of order `2n` (`n` a power of two, `n >= 4`).
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum EfStatus ef_dihedral(uint64_t n, struct EfGroup **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `group` must be NULL or a handle not yet freed.
 */
void ef_group_free(struct EfGroup *group);

/**
 * Sets the largest group order that enumeration will accept.
 *
 * # Safety
 * `group` must be a live handle.
 */
enum EfStatus ef_group_set_cap(struct EfGroup *group, uint64_t cap);

/**
 * # Safety
 * `group` must be a live handle and `out` valid for one write.
 */
enum EfStatus ef_group_order(const struct EfGroup *group, uint64_t *out);

/**
 * Nilpotency class read from the computed lower central series.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for one write.
 */
enum EfStatus ef_nilpotency_class(const struct EfGroup *group, uint64_t *out);

/**
 * # Safety
 * `group` must be a live handle and `out` valid for one write.
 */
enum EfStatus ef_center_order(const struct EfGroup *group, uint64_t *out);

/**
 * Witness report for `group` as a JSON object, same schema as the CLI.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for one pointer write. The
 * string must be released with [`ef_string_free`].
 */
enum EfStatus ef_verify_witness_json(const struct EfGroup *group,
                                     uint64_t p,
                                     uint64_t expected_class,
                                     char **out);

/**
 * Builds `K(p, r)` under `cap` and returns its witness report as JSON.
 *
 * # Safety
 * `out` must be valid for one pointer write; release with [`ef_string_free`].
 */
enum EfStatus ef_witness_json(uint64_t p, uint32_t r, uint64_t cap, char **out);

/**
 * Plain-text presentation of `K(p, r)`.
 *
 * # Safety
 * `out` must be valid for one pointer write; release with [`ef_string_free`].
 */
enum EfStatus ef_presentation(uint64_t p, uint32_t r, char **out);

/**
 * Whether `x0^(p^(r-1))` fails to commute with `y` in `K(p, r)`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum EfStatus ef_check_lemma(uint64_t p, uint32_t r, bool *out);

/**
 * `floor((c - 1)/(p - 1))`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum EfStatus ef_exponent_gap(uint64_t p, uint64_t c, uint64_t *out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void ef_string_free(char *s);

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *ef_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EASTERFIELD_H */
