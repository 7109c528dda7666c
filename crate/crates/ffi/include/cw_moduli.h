#ifndef CW_MODULI_H
#define CW_MODULI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum CwStatus {
  CW_STATUS_OK = 0,
  CW_STATUS_NULL_POINTER = 1,
  CW_STATUS_INVALID_UTF8 = 2,
  // Unparsable group spec or vector JSON.
  CW_STATUS_PARSE = 3,
  CW_STATUS_GROUP = 4,
  CW_STATUS_ARITHMETIC = 5,
  CW_STATUS_CHAR_TABLE = 6,
  CW_STATUS_HURWITZ = 7,
  CW_STATUS_MULTIPLICITY = 8,
  CW_STATUS_DECOMPOSITION = 9,
  CW_STATUS_METACYCLIC = 10,
  CW_STATUS_BUFFER_TOO_SMALL = 11,
  CW_STATUS_PANIC = 12,
} CwStatus;

// A finite group.
typedef struct CwGroup CwGroup;

// A character table together with its working prime.
typedef struct CwTable CwTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the last error message of this thread into `buf` (NUL
// terminated, truncated to `len - 1` bytes) and returns the full message
// length excluding the terminator.
//
// # Safety
// `buf` must be null or point to `len` writable bytes.
size_t cw_last_error_message(char *buf, size_t len);

// Builds a group from a spec such as `cyclic:3`, `metacyclic:4,2,3` or
// `perm:(1 2 3);(1 2)`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be writable.
enum CwStatus cw_group_new(const char *spec, struct CwGroup **out);

// # Safety
// `g` must be null or a handle from `cw_group_new` not yet freed.
void cw_group_free(struct CwGroup *g);

// Group order, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live group handle.
size_t cw_group_order(const struct CwGroup *g);

// Genus of the curve encoded by a Hurwitz vector given as JSON
// `{"g_quot": .., "handles": [..], "branches": [..]}`; the vector is
// validated first.
//
// # Safety
// `g` must be a live group handle, `vector_json` NUL-terminated, `out`
// writable.
enum CwStatus cw_vector_genus(const struct CwGroup *g, const char *vector_json, int64_t *out);

// Counts Hurwitz vectors with quotient genus `g_quot` and the `n_orders`
// branch orders in `orders`, optionally one per conjugacy orbit.
//
// # Safety
// `g` must be a live group handle, `orders` must point to `n_orders`
// values (or be null when `n_orders == 0`), `out` writable.
enum CwStatus cw_count_hurwitz_vectors(const struct CwGroup *g,
                                       size_t g_quot,
                                       const size_t *orders,
                                       size_t n_orders,
                                       bool up_to_conjugacy,
                                       uint64_t *out);

// Character table valid for levels up to `k_max` and genera up to `g_max`.
//
// # Safety
// `g` must be a live group handle and `out` writable.
enum CwStatus cw_table_new(const struct CwGroup *g,
                           uint64_t k_max,
                           uint64_t g_max,
                           struct CwTable **out);

// # Safety
// `t` must be null or a handle from `cw_table_new` not yet freed.
void cw_table_free(struct CwTable *t);

// Number of irreducible characters, or 0 for a null handle.
//
// # Safety
// `t` must be null or a live table handle.
size_t cw_table_len(const struct CwTable *t);

// Working prime of the table, or 0 for a null handle.
//
// # Safety
// `t` must be null or a live table handle.
uint64_t cw_table_prime(const struct CwTable *t);

// Degrees of the irreducible characters in table order.
//
// # Safety
// `t` must be a live table handle, `out` must hold `cap` values and
// `needed` must be null or writable.
enum CwStatus cw_table_degrees(const struct CwTable *t, uint64_t *out, size_t cap, size_t *needed);

// Character values of irreducible `rho` as residues mod the working prime,
// one per conjugacy class.
//
// # Safety
// As for `cw_table_degrees`.
enum CwStatus cw_table_character(const struct CwTable *t,
                                 size_t rho,
                                 uint64_t *out,
                                 size_t cap,
                                 size_t *needed);

// Multiplicities of every irreducible character in `H^0(omega^k)` for the
// curve encoded by `vector_json`.
//
// # Safety
// `t` must be a live table handle, `vector_json` NUL-terminated, `out`
// must hold `cap` values and `needed` must be null or writable.
enum CwStatus cw_multiplicities(const struct CwTable *t,
                                const char *vector_json,
                                uint64_t k,
                                uint64_t *out,
                                size_t cap,
                                size_t *needed);

// Order of the Schur multiplier of `<x, y | x^m = y^n = 1, y x y^-1 = x^r>`.
//
// # Safety
// `out` must be writable.
enum CwStatus cw_schur_multiplier_order(uint64_t m, uint64_t n, uint64_t r, uint64_t *out);

// Lower bound on components of the regular-representation locus in genus
// `genus` for a nonabelian split metacyclic group.
//
// # Safety
// `out` must be writable.
enum CwStatus cw_rr_component_lower_bound(uint64_t m,
                                          uint64_t n,
                                          uint64_t r,
                                          uint64_t genus,
                                          uint64_t *out);

// Library version as a static NUL-terminated string.
const char *cw_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CW_MODULI_H */
