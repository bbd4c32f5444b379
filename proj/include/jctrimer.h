/* jctrimer: ground-state phase structure of a three-site Jaynes-Cummings
 * lattice with complex photon hopping.
 *
 * C API over the C++ core: opaque handles, integer status codes, and a
 * thread-local error message. All frequencies are in units of the cavity
 * frequency (omega_c = 1); angles are radians. Every function returning int
 * yields JCT_OK on success or a JCT_ERR_* code, with details available from
 * jct_last_error().
 */
#ifndef JCTRIMER_H
#define JCTRIMER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    JCT_OK = 0,
    JCT_ERR_INVALID_ARGUMENT = 1,
    JCT_ERR_BELOW_CRITICAL = 2,
    JCT_ERR_DEGENERATE_SITE = 3,
    JCT_ERR_NO_CONVERGENCE = 4,
    JCT_ERR_DIMENSION_CAP = 5,
    JCT_ERR_NO_CROSSING = 6,
    JCT_ERR_UNSTABLE_FORM = 7,
    JCT_ERR_IO = 8,
    JCT_ERR_INTERNAL = 9
};

enum {
    JCT_PHASE_NP = 0,
    JCT_PHASE_USP = 1,
    JCT_PHASE_FSP = 2,
    JCT_PHASE_CFSP = 3
};

typedef struct jct_params jct_params;
typedef struct jct_solution jct_solution;
typedef struct jct_sweep jct_sweep;
typedef struct jct_table jct_table;

typedef struct jct_solver_options {
    int n_random;        /* random multistart seeds (default 8) */
    int max_iter;        /* per-start iteration cap (default 500) */
    double tol_residual; /* convergence at max|D_n| < tol_residual * omega0 (default 1e-10) */
    uint64_t seed;       /* RNG seed (default 12345) */
} jct_solver_options;

/* Amplitudes cross the ABI as double[6] = (Re a1, Im a1, Re a2, Im a2, Re a3, Im a3). */

const char* jct_version(void);
const char* jct_status_name(int status);
/* Message for the most recent failure on this thread; empty string if none. */
const char* jct_last_error(void);

/* --- parameters ------------------------------------------------------- */

int jct_params_create(double omega0, double g1, double j, double theta, jct_params** out);
void jct_params_destroy(jct_params* p);
double jct_params_omega0(const jct_params* p);
double jct_params_g1(const jct_params* p);
double jct_params_j(const jct_params* p);
double jct_params_theta(const jct_params* p); /* wrapped into (-pi, pi] */
double jct_params_g(const jct_params* p);     /* g1 * sqrt(omega0) */
double jct_params_eta(const jct_params* p);   /* omega0 / omega_c */

void jct_solver_options_init(jct_solver_options* opts);
/* key=value file (keys: omega0, g1, j, theta, n_random, max_iter,
 * tol_residual, seed). Either output may be NULL. */
int jct_config_load(const char* path, jct_params** params_out, jct_solver_options* opts_out);

/* --- normal phase ------------------------------------------------------ */

int jct_np_dispersion(const jct_params* p, double q, double* eps_out);
int jct_critical_coupling(const jct_params* p, double* g1c_out);
int jct_np_ground_energy(const jct_params* p, double* e_out);
/* eps for q in {0, +2pi/3, -2pi/3} plus E_g^NP; stable_out may be NULL */
int jct_np_spectrum(const jct_params* p, double eps_out[3], double* ground_energy_out,
                    int* stable_out);

/* --- mean field / quadratic form --------------------------------------- */

int jct_classical_energy(const jct_params* p, const double alpha[6], double* e_out);
/* the three D_n values, same layout as alpha */
int jct_gradient(const jct_params* p, const double alpha[6], double d_out[6]);
/* sign is +1 or -1; fails with JCT_ERR_BELOW_CRITICAL when the radicand <= 0 */
int jct_usp_amplitude(const jct_params* p, int sign, double alpha_out[6]);
/* closed-form uniform-branch spectrum; any output may be NULL */
int jct_usp_spectrum(const jct_params* p, double eps_out[3], double* omega_q0_out,
                     double* nu0_out);
/* Bogoliubov spectrum at the given displacements (sorted ascending) */
int jct_bogoliubov(const jct_params* p, const double alpha[6], double eps_out[3],
                   int* stable_out, double* ground_energy_out);
int jct_observables(const jct_params* p, const double alpha[6], double* current_scaled_out,
                    double* chirality_scaled_out);

/* --- solver ------------------------------------------------------------ */

int jct_solve(const jct_params* p, const jct_solver_options* opts, jct_solution** out);
void jct_solution_destroy(jct_solution* s);
int jct_solution_amplitudes(const jct_solution* s, double alpha_out[6]);
int jct_solution_phase(const jct_solution* s); /* JCT_PHASE_*, or negative error */
double jct_solution_classical_energy(const jct_solution* s);
double jct_solution_ground_energy(const jct_solution* s);
double jct_solution_residual(const jct_solution* s);
int jct_solution_epsilons(const jct_solution* s, double eps_out[3]);
int jct_solution_stable(const jct_solution* s);
int jct_solution_restarts(const jct_solution* s);
int jct_solution_observables(const jct_solution* s, double* current_scaled_out,
                             double* chirality_scaled_out);
/* order parameters alpha_n / sqrt(eta), alpha_3-real gauge */
int jct_solution_order_parameters(const jct_solution* s, double out[6]);
/* Degenerate configurations from {translations} x {sign flip}; writes up to
 * cap amplitude sextuples. */
int jct_degenerate_orbit(const jct_solution* s, double* alphas_out, int cap, int* count_out);

/* --- sweeps and figures ------------------------------------------------- */

typedef struct jct_cell {
    double theta, g1;
    int phase; /* JCT_PHASE_* */
    int ok;    /* 0 marks a per-cell solver failure */
    double e_g;
    double eps_min;
    double eps[3];
    double current_scaled;
    double chirality_scaled;
    double alpha[6];
} jct_cell;

/* Axes must be ascending. threads = 0 picks the hardware count, capped by the
 * JCTRIMER_THREADS environment variable. */
int jct_sweep_run(const jct_params* base, const jct_solver_options* opts, const double* g1_axis,
                  int n_g1, const double* theta_axis, int n_theta, int threads, jct_sweep** out);
void jct_sweep_destroy(jct_sweep* s);
int jct_sweep_shape(const jct_sweep* s, int* n_theta_out, int* n_g1_out);
int jct_sweep_cell(const jct_sweep* s, int i_theta, int i_g1, jct_cell* out);

int jct_boundary_scan_theta(const jct_params* base, const jct_solver_options* opts,
                            double g1_fixed, double theta_lo, double theta_hi, double tol,
                            double* theta_c_out);
int jct_boundary_scan_g1(const jct_params* base, const jct_solver_options* opts,
                         double theta_fixed, double g1_lo, double g1_hi, double tol,
                         double* g1_c_out);

/* fig is 2, 3 or 4. Pass NULL axes for the published-figure defaults. */
int jct_figure_table(const jct_params* base, const jct_solver_options* opts, int fig,
                     const double* thetas, int n_thetas, const double* g1s, int n_g1s,
                     jct_table** out);
void jct_table_destroy(jct_table* t);
int jct_table_shape(const jct_table* t, int* rows_out, int* cols_out);
const char* jct_table_column(const jct_table* t, int col);
/* Row label when the table carries one (validation report), else NULL. */
const char* jct_table_row_label(const jct_table* t, int row);
int jct_table_get(const jct_table* t, int row, int col, double* out);

/* --- exact-diagonalization oracle --------------------------------------- */

int jct_ed_commutator_norm(const jct_params* p, int n_max, double* out);
/* sector < 0 diagonalizes the full truncated space */
int jct_ed_ground(const jct_params* p, int n_max, int sector, double* energy_out,
                  double* max_abs_a_out, double* current_out);
/* N_tot = 1 photon-branch excitation energies, sorted ascending */
int jct_ed_photon_branch(const jct_params* p, int n_max, double eps_out[3]);
int jct_brute_force_minimize(const jct_params* p, long n_samples, uint64_t seed,
                             jct_solution** out);

/* Oracle suite: columns (measured, threshold, pass), one labeled row per
 * check. Returns JCT_OK even when checks fail; inspect the pass column. */
int jct_validate(const jct_params* p, const jct_solver_options* opts, int n_max, int sector,
                 jct_table** report_out);

#ifdef __cplusplus
}
#endif

#endif /* JCTRIMER_H */
