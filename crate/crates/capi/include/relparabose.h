/* C interface for the relparabose library. */

#ifndef RELPARABOSE_H
#define RELPARABOSE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which bilinear families a realization uses.
 */
typedef enum RpbMode {
  RPB_MODE_MIXED = 0,
  RPB_MODE_PARABOSON = 1,
  RPB_MODE_PARAFERMION = 2,
} RpbMode;

/**
 * Result of a C ABI call. Codes mirror the CLI exit codes.
 */
typedef enum RpbStatus {
  RPB_STATUS_OK = 0,
  RPB_STATUS_CHECK_FAILED = 1,
  RPB_STATUS_INVALID_ARGUMENT = 2,
  RPB_STATUS_INVALID_INPUT = 3,
  /**
   * An internal invariant was violated; the library state is still sound.
   */
  RPB_STATUS_INTERNAL = 4,
} RpbStatus;

/**
 * Opaque handle to a constructed color Lie algebra L(m,n).
 */
typedef struct RpbAlgebra RpbAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds L(m,n). On success writes a handle into `out`.
 *
 * # Safety
 * `out` must be a valid pointer to a pointer slot.
 */
enum RpbStatus rpb_algebra_build(uint32_t m, uint32_t n, struct RpbAlgebra **out);

/**
 * Releases a handle obtained from [`rpb_algebra_build`]. Null is a no-op.
 *
 * # Safety
 * `alg` must be null or a pointer returned by [`rpb_algebra_build`] that
 * has not been freed yet.
 */
void rpb_algebra_free(struct RpbAlgebra *alg);

/**
 * Number of canonical basis symbols; 0 when `alg` is null.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t rpb_algebra_dimension(const struct RpbAlgebra *alg);

/**
 * Writes the display name of basis symbol `index` (e.g. `{B1+,B2-}`).
 *
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer slot.
 */
enum RpbStatus rpb_algebra_symbol_name(const struct RpbAlgebra *alg, size_t index, char **out);

/**
 * Runs the grading/antisymmetry/Jacobi suite on a built algebra and writes
 * the JSON report.
 *
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer slot.
 */
enum RpbStatus rpb_algebra_check_json(const struct RpbAlgebra *alg, char **out);

/**
 * Serializes the exported color algebra (basis, grades, bracket table)
 * as JSON.
 *
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer slot.
 */
enum RpbStatus rpb_algebra_to_json(const struct RpbAlgebra *alg, char **out);

/**
 * Verifies the four quadruple-bracket identities; writes the JSON report.
 *
 * # Safety
 * `out` must be a valid pointer slot.
 */
enum RpbStatus rpb_identities_json(char **out);

/**
 * Builds L(m,n), runs the axiom suite, and optionally the truncated-Fock
 * oracle at the given boson cutoff; writes the JSON report.
 *
 * # Safety
 * `out` must be a valid pointer slot.
 */
enum RpbStatus rpb_check_pbf_json(uint32_t m,
                                  uint32_t n,
                                  bool with_oracle,
                                  uint32_t cutoff,
                                  char **out);

/**
 * Runs the braided Hopf axiom suite over words up to `max_len`; writes the
 * JSON report.
 *
 * # Safety
 * `out` must be a valid pointer slot.
 */
enum RpbStatus rpb_check_hopf_json(uint32_t m, uint32_t n, uint32_t max_len, char **out);

/**
 * Parses an algebra document (the same JSON schema the CLI reads), builds
 * the paraparticle realization, verifies it, and writes the JSON report.
 *
 * # Safety
 * `algebra_json` must be a NUL-terminated string and `out` a valid
 * pointer slot.
 */
enum RpbStatus rpb_realize_json(const char *algebra_json,
                                enum RpbMode mode,
                                bool with_hopf,
                                char **out);

/**
 * Releases a string produced by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string returned by this library that has not been
 * freed yet.
 */
void rpb_string_free(char *s);

/**
 * The library version as a static string; do not free.
 */
const char *rpb_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RELPARABOSE_H */
