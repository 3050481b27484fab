#ifndef DDLPB_H
#define DDLPB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Linear-system strategy, see [`DdlpbSolveParams::mode`].
 */
typedef enum DdlpbMode {
  DDLPB_MODE_OUTER = 0,
  DDLPB_MODE_GLOBAL = 1,
} DdlpbMode;

/**
 * Result code of every call.
 */
typedef enum DdlpbStatus {
  DDLPB_OK = 0,
  DDLPB_NULL_POINTER = 1,
  DDLPB_INVALID_ARGUMENT = 2,
  DDLPB_PARSE_ERROR = 3,
  DDLPB_IO_ERROR = 4,
  DDLPB_UNSUPPORTED_GRID = 5,
  DDLPB_CHARGE_OUTSIDE_CAVITY = 6,
  DDLPB_SINGULAR_EVALUATION = 7,
  DDLPB_NO_CONVERGENCE = 8,
  DDLPB_NO_EXPOSED_SURFACE = 9,
  DDLPB_BUFFER_TOO_SMALL = 10,
  DDLPB_INTERNAL_ERROR = 11,
} DdlpbStatus;

/**
 * Opaque solute: balls plus the point charges that generate the field.
 */
typedef struct DdlpbCavity DdlpbCavity;

/**
 * Opaque result of a solve.
 */
typedef struct DdlpbReport DdlpbReport;

/**
 * Medium and discretization parameters of one solve.
 */
typedef struct DdlpbSolveParams {
  double eps1;
  double eps2;
  /**
   * 1/Å; zero selects the salt-free limit.
   */
  double kappa;
  uint32_t lmax;
  uint32_t n_leb;
  double tol;
  double gmres_tol;
  enum DdlpbMode mode;
  /**
   * Nonzero runs every operator application on the calling thread.
   */
  int32_t deterministic;
} DdlpbSolveParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default parameters: ε1 = 1, ε2 = 78.54, κ = 0.104 Å⁻¹, ℓmax = 7 on 86 nodes,
 * outer iteration to a relative energy increment of 1e-4.
 */
struct DdlpbSolveParams ddlpb_solve_params_default(void);

/**
 * Creates a cavity of `n` balls. `centers` holds `3n` coordinates in Å;
 * each ball carries its charge at its center.
 *
 * # Safety
 * `centers` must point to `3n` doubles, `radii` and `charges` to `n` each,
 * and `out` must be a valid pointer.
 */
enum DdlpbStatus ddlpb_cavity_new(size_t n,
                                  const double *centers,
                                  const double *radii,
                                  const double *charges,
                                  struct DdlpbCavity **out);

/**
 * Reads a cavity from a PQR file; charges sit at the atom centers.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum DdlpbStatus ddlpb_cavity_from_pqr(const char *path, struct DdlpbCavity **out);

/**
 * Replaces the point charges of a cavity with `n` charges at `positions` (3n doubles).
 *
 * # Safety
 * `cavity` must come from a `ddlpb_cavity_*` constructor; the arrays must
 * hold `3n` and `n` doubles.
 */
enum DdlpbStatus ddlpb_cavity_set_charges(struct DdlpbCavity *cavity,
                                          size_t n,
                                          const double *positions,
                                          const double *charges);

/**
 * Number of balls.
 *
 * # Safety
 * `cavity` must be a live handle and `out` a valid pointer.
 */
enum DdlpbStatus ddlpb_cavity_len(const struct DdlpbCavity *cavity, size_t *out);

/**
 * Releases a cavity. Passing null is a no-op.
 *
 * # Safety
 * `cavity` must be null or a handle not yet freed.
 */
void ddlpb_cavity_free(struct DdlpbCavity *cavity);

/**
 * Solves for the reaction potential and solvation energy.
 *
 * # Safety
 * `cavity` must be a live handle, `params` and `out` valid pointers.
 */
enum DdlpbStatus ddlpb_solve(const struct DdlpbCavity *cavity,
                             const struct DdlpbSolveParams *params,
                             struct DdlpbReport **out);

/**
 * Solvation energy in kcal/mol.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum DdlpbStatus ddlpb_report_energy(const struct DdlpbReport *report, double *out);

/**
 * Outer iterations performed (1 in global mode).
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum DdlpbStatus ddlpb_report_outer_iterations(const struct DdlpbReport *report, size_t *out);

/**
 * Number of exposed surface samples.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum DdlpbStatus ddlpb_report_surface_len(const struct DdlpbReport *report, size_t *out);

/**
 * Copies the surface samples as rows `x y z psi_r` into `buf`, which must
 * hold `4 × ddlpb_report_surface_len` doubles; `capacity` counts doubles.
 *
 * # Safety
 * `report` must be a live handle and `buf` must hold `capacity` doubles.
 */
enum DdlpbStatus ddlpb_report_surface(const struct DdlpbReport *report,
                                      double *buf,
                                      size_t capacity);

/**
 * Releases a report. Passing null is a no-op.
 *
 * # Safety
 * `report` must be null or a handle not yet freed.
 */
void ddlpb_report_free(struct DdlpbReport *report);

/**
 * Kirkwood reference energy (kcal/mol) of `n` charges inside a sphere of
 * radius `radius` centered at the origin, without salt.
 *
 * # Safety
 * `positions` must hold `3n` doubles, `charges` `n`, and `out` must be valid.
 */
enum DdlpbStatus ddlpb_kirkwood_energy(size_t n,
                                       const double *positions,
                                       const double *charges,
                                       double radius,
                                       double eps1,
                                       double eps2,
                                       double *out);

/**
 * Energy (kcal/mol) of a charge at the center of one ball in a screened solvent.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum DdlpbStatus ddlpb_born_energy(double q,
                                   double radius,
                                   double eps1,
                                   double eps2,
                                   double kappa,
                                   double *out);

/**
 * Copies the last error message of this thread, NUL-terminated and truncated
 * to `capacity` bytes. Returns the full message length excluding the NUL.
 *
 * # Safety
 * `buf` must be null or hold `capacity` bytes.
 */
size_t ddlpb_last_error_message(char *buf, size_t capacity);

/**
 * Static description of a status code.
 */
const char *ddlpb_status_string(enum DdlpbStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DDLPB_H */
