#ifndef TORSECM_H
#define TORSECM_H

/* C API for the torsecm library: elliptic-curve catalog, point counting,
 * smoothness census, torsion/rank verification, and ECM factorization.
 *
 * All functions returning tecm_status yield TECM_OK on success and
 * TECM_ERR on failure; tecm_last_error() describes the most recent
 * failure on the calling thread.  Strings returned through char** out
 * parameters are heap-allocated and must be released with
 * tecm_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tecm_status {
  TECM_OK = 0,
  TECM_ERR = 1,
} tecm_status;

/* Opaque rational Weierstrass curve handle. */
typedef struct tecm_curve tecm_curve;

const char* tecm_last_error(void);
void tecm_string_free(char* s);

/* Curve handles ------------------------------------------------------- */

/* Parse a curve record "a1=n/d a2=n/d a3=n/d a4=n/d a6=n/d". */
tecm_status tecm_curve_parse(const char* record, tecm_curve** out);
/* Look up a curve by catalog label (e.g. "E0", "E12", "4x8t4"). */
tecm_status tecm_curve_catalog(const char* label, tecm_curve** out);
/* Serialize a curve back to its record form (bit-exact round trip). */
tecm_status tecm_curve_record(const tecm_curve* curve, char** out);
void tecm_curve_free(tecm_curve* curve);

/* Catalog --------------------------------------------------------------*/

/* Newline-separated list of catalog labels. */
tecm_status tecm_catalog_labels(char** out);
/* Full structured catalog text (one record per entry). */
tecm_status tecm_catalog_text(char** out);

/* Point counting ------------------------------------------------------ */

/* |E(F_p)| at a good prime p > 3. */
tecm_status tecm_count(const tecm_curve* curve, uint64_t p, uint64_t* out);

/* Census ---------------------------------------------------------------*/

/* Run the smoothness census.
 *   sets:    comma-separated labels from A,B,C,D,E,F
 *   curves:  comma-separated catalog labels, or "all" for the census eight
 *   lo, hi:  1-based prime index range (census default 50, 10050)
 *   bound:   smoothness bound (census default 100)
 *   workers: parallelism (>= 1); identical output for any worker count
 *   csv:     nonzero emits "curve,set,count,set_size" CSV, else a table
 */
tecm_status tecm_census(const char* sets, const char* curves, size_t lo,
                        size_t hi, uint64_t bound, int workers, int csv,
                        char** out);

/* Generators ------------------------------------------------------------*/

/* Generate a family member and return its curve record plus metadata.
 *   family: "4x8" | "3x3" | "rab3x3" | "5x5" | "3x6:i" | "3x6:ii" |
 *           "3x6:iii" | "6x6:i" | "6x6:ii" | "6x6:iii"
 *   param:  rational parameter "a/b"
 *   z:      rational square root of the variant condition (3x6/6x6 only;
 *           pass NULL or "" elsewhere)
 */
tecm_status tecm_gen(const char* family, const char* param, const char* z,
                     char** out);

/* Verification ---------------------------------------------------------*/

/* Torsion-order divisibility over `sample` good split primes.
 *   split: ";"-separated conditions "(a/p)=1" / "(a/p)=-1" / "p%m=r",
 *          NULL or "" for no condition.
 *   pass:  1 pass / 0 fail
 */
tecm_status tecm_verify_injection(const tecm_curve* curve, uint64_t order,
                                  const char* split, size_t sample,
                                  int* pass, char** report);

/* Nontorsion certificate for the point (x, y); verdict 1 pass / 0
 * inconclusive. */
tecm_status tecm_verify_nontorsion(const tecm_curve* curve, const char* x,
                                   const char* y, int* verdict,
                                   char** report);

/* Heuristic independence of two points; pass 1 / 0. */
tecm_status tecm_verify_independence(const tecm_curve* curve, const char* x1,
                                     const char* y1, const char* x2,
                                     const char* y2, long bound, int* pass,
                                     char** report);

/* ECM --------------------------------------------------------------------*/

/* Factor n (decimal string, gcd(n,6)=1) with the configured curves.
 *   curves: "catalog:all" | "catalog:E0,E7,..." |
 *           "family:<name>:p1,p2,..." (parameters as rationals)
 *   b2:     0 disables stage 2
 * Output: "factor=<g> curve=<label> stage=<1|2>", "collapse curve=<label>"
 * or "exhausted", followed by one "skip: <curve>: <reason>" line per
 * skipped curve.  found is set to 1 only for a factor outcome.
 */
tecm_status tecm_ecm(const char* n, uint64_t b1, uint64_t b2,
                     size_t max_curves, const char* curves, int* found,
                     char** out);

/* Divide all factors of 2 and 3 out of n (decimal string).  stripped gets
 * the cofactor, removed a space-separated list of the removed prime
 * factors ("" when none). */
tecm_status tecm_strip_23(const char* n, char** stripped, char** removed);

/* Configured sieve capacity (see TORSECM_SIEVE_LIMIT). */
uint64_t tecm_sieve_limit(void);

#ifdef __cplusplus
}
#endif

#endif /* TORSECM_H */
