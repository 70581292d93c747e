#ifndef HOPF_GALOIS_H
#define HOPF_GALOIS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success; for commands, every requested check passed or a verdict was computed.
 */
#define HG_OK 0

/**
 * A requested verification failed.
 */
#define HG_VERIFICATION_FAILED 1

/**
 * Malformed input, unknown id, or unusable parameters.
 */
#define HG_INPUT_ERROR 2

/**
 * A linear-algebra precondition failed during a computation.
 */
#define HG_MATH_ERROR 3

/**
 * A required pointer argument was null.
 */
#define HG_NULL_POINTER -1

/**
 * The library panicked; this is a bug.
 */
#define HG_INTERNAL_ERROR -2

/**
 * Braiding selector: the Yetter-Drinfeld braiding.
 */
#define HG_BRAIDING_YD 0

/**
 * Braiding selector: the plain flip on the same objects.
 */
#define HG_BRAIDING_SWAP 1

/**
 * A loaded system together with its category.
 */
typedef struct HgSystem HgSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a system from a built-in id such as `adjoint-smash:h4`.
 *
 * `field` is `rational` or `fp:<prime>`.
 *
 * # Safety
 * `id` and `field` must be nul-terminated strings and `out` a valid pointer.
 */
int32_t hg_system_from_builtin(const char *id,
                               const char *field,
                               int32_t braiding,
                               struct HgSystem **out);

/**
 * Creates a system from a structure-constant document. A null `name` selects the
 * unique crossed or comodule-algebra system of the document.
 *
 * # Safety
 * `json` must be a nul-terminated string, `name` null or nul-terminated, and `out` a
 * valid pointer.
 */
int32_t hg_system_from_json(const char *json,
                            const char *name,
                            int32_t braiding,
                            struct HgSystem **out);

/**
 * Releases a system. Null is ignored.
 *
 * # Safety
 * `sys` must come from one of the constructors and not have been freed.
 */
void hg_system_free(struct HgSystem *sys);

/**
 * Runs the axiom battery for the system's kind and writes the report.
 *
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
int32_t hg_check(const struct HgSystem *sys, char **out);

/**
 * Decides the Galois property. For crossed systems the full certificate is verified;
 * a comodule algebra that is not Galois still returns `HG_OK` with `"galois": false`.
 *
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
int32_t hg_galois(const struct HgSystem *sys, char **out);

/**
 * Builds the Galois data of a crossed system, extracts the action and cocycle back with
 * the identity normal basis, and compares them with the originals.
 *
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
int32_t hg_roundtrip(const struct HgSystem *sys, char **out);

/**
 * Writes a built-in as a structure-constant document.
 *
 * # Safety
 * `id` and `field` must be nul-terminated strings and `out` a valid pointer.
 */
int32_t hg_export_builtin(const char *id, const char *field, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hg_string_free(char *s);

/**
 * The message of the last failure on this thread, or null. Valid until the next call
 * into the library on the same thread.
 */
const char *hg_last_error(void);

/**
 * The library version as a static string.
 */
const char *hg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPF_GALOIS_H */
