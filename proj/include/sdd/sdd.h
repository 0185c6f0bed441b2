/* sdd: spectral density difference estimation.
 *
 * C interface to the estimator library. The library estimates the difference
 * of inverse spectral density matrices between two stationary multichannel
 * time-series conditions directly, through an l1-penalized D-trace loss on
 * smoothed periodograms, without inverting either spectral estimate. It also
 * ships the plug-in baselines, eBIC tuning, a VAR(1) benchmark simulator and
 * support-recovery metrics.
 *
 * Conventions:
 *   - every function returns an int status (SDD_OK = 0 on success); outputs
 *     are written through trailing pointer arguments;
 *   - objects are opaque handles released with the matching _free function
 *     (safe on NULL);
 *   - on failure, sdd_last_error_message() returns a thread-local
 *     human-readable description of the most recent error;
 *   - complex p x p matrices travel as separate real/imaginary row-major
 *     buffers; expanded real matrices are 2p x 2p row-major buffers.
 */

#ifndef SDD_H
#define SDD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SDD_VERSION "0.1.0"

/* --- status codes ------------------------------------------------------- */

enum {
    SDD_OK = 0,
    SDD_ERR_ARGUMENT = 1,        /* invalid argument value */
    SDD_ERR_PARSE = 2,           /* non-numeric CSV cell */
    SDD_ERR_STRUCTURE = 3,       /* ragged rows / block-structure violation */
    SDD_ERR_BOUNDS = 4,          /* index or segment out of range */
    SDD_ERR_BANDWIDTH = 5,       /* smoothing span incompatible with n */
    SDD_ERR_NOT_PSD = 6,         /* spectral input not positive semidefinite */
    SDD_ERR_SINGULAR = 7,        /* matrix numerically singular */
    SDD_ERR_DEGENERATE_PATH = 8, /* tuning path cannot be formed */
    SDD_ERR_GENERATION = 9,      /* random model failed stability safeguard */
    SDD_ERR_IO = 10,             /* file read/write failure */
    SDD_ERR_INTERNAL = 11        /* unexpected internal failure */
};

const char* sdd_version(void);
/* Static name for a status code, e.g. "SDD_ERR_PARSE". */
const char* sdd_status_name(int status);
/* Thread-local message describing the most recent failure in this thread. */
const char* sdd_last_error_message(void);

/* --- opaque handles ------------------------------------------------------ */

typedef struct sdd_panel sdd_panel;           /* time x channel data panel */
typedef struct sdd_spectral sdd_spectral;     /* per-panel spectral engine */
typedef struct sdd_cmatrix sdd_cmatrix;       /* complex p x p matrix */
typedef struct sdd_expanded sdd_expanded;     /* real 2p x 2p expanded matrix */
typedef struct sdd_estimate sdd_estimate;     /* difference estimate */
typedef struct sdd_path sdd_path;             /* tuning path result */
typedef struct sdd_var_model sdd_var_model;   /* VAR(1) model */

/* --- panels -------------------------------------------------------------- */

/* Load a CSV of comma-separated numbers, optional header row of channel
 * names. rows_are_channels != 0 transposes the file on load. */
int sdd_panel_load_csv(const char* path, int rows_are_channels, sdd_panel** out);
/* Wrap a row-major n x p buffer (copied). */
int sdd_panel_create(const double* data, int64_t n, int64_t p, sdd_panel** out);
int sdd_panel_save_csv(const sdd_panel* panel, const char* path);
int sdd_panel_demean(const sdd_panel* panel, sdd_panel** out);
/* Rows [start, end) as a new panel; does not re-demean. */
int sdd_panel_segment(const sdd_panel* panel, int64_t start, int64_t end, sdd_panel** out);
int64_t sdd_panel_rows(const sdd_panel* panel);
int64_t sdd_panel_cols(const sdd_panel* panel);
/* Copy all values into a row-major n x p buffer. */
int sdd_panel_copy(const sdd_panel* panel, double* buffer);
void sdd_panel_free(sdd_panel* panel);

/* --- Fourier grid and smoothing ------------------------------------------ */

/* ceil(n^(2/3)), the default smoothing span parameter M. */
int sdd_default_bandwidth(int64_t n, int64_t* out);
/* Grid index j (lambda_j = 2 pi j / n) nearest to target_hz at sampling rate
 * fs; ties go to the smaller index. target_hz must lie in [0, fs/2]. */
int sdd_nearest_fourier_index(double target_hz, int64_t n, double fs, int64_t* out);
/* Same for an angular target in [0, pi]. */
int sdd_nearest_fourier_index_rad(double target_rad, int64_t n, int64_t* out);
/* lambda_j for a grid index in [-floor((n-1)/2), floor(n/2)]. */
int sdd_fourier_frequency(int64_t n, int64_t j, double* out);
/* count evenly spaced targets over [0, pi - 1/n], snapped to the grid and
 * deduplicated. indices must hold count entries; *out_count receives the
 * number actually produced. */
int sdd_evenly_spaced_indices(int64_t n, int64_t count, int64_t* indices, int64_t* out_count);

/* --- spectral estimation -------------------------------------------------- */

/* Build the FFT-backed engine for one panel (demean first). */
int sdd_spectral_create(const sdd_panel* panel, sdd_spectral** out);
/* Raw periodogram at grid index j (wrapped with period n). */
int sdd_spectral_periodogram(const sdd_spectral* engine, int64_t j, sdd_cmatrix** out);
/* Smoothed periodogram: mean of the 2M+1 raw periodograms centred at j with
 * periodic index wraparound. */
int sdd_spectral_smoothed(const sdd_spectral* engine, int64_t j, int64_t bandwidth,
                          sdd_cmatrix** out);
void sdd_spectral_free(sdd_spectral* engine);

/* --- complex matrices ----------------------------------------------------- */

/* Wrap row-major real/imaginary p x p buffers (copied). */
int sdd_cmatrix_create(const double* re, const double* im, int64_t p, sdd_cmatrix** out);
int64_t sdd_cmatrix_dim(const sdd_cmatrix* m);
/* Copy into row-major p x p buffers; either may be NULL to skip. */
int sdd_cmatrix_copy(const sdd_cmatrix* m, double* re, double* im);
/* Interleaved re/im CSV (row i: re(i,0),im(i,0),re(i,1),...). */
int sdd_cmatrix_save_csv(const sdd_cmatrix* m, const char* path);
int sdd_cmatrix_load_csv(const char* path, sdd_cmatrix** out);
void sdd_cmatrix_free(sdd_cmatrix* m);

/* --- expanded real representation ----------------------------------------- */

/* [[A, -B], [B, A]] for the complex matrix A + iB. */
int sdd_expand(const sdd_cmatrix* f, sdd_expanded** out);
/* Recover A + iB from the expanded blocks; the input must satisfy the block
 * structure within 1e-8 (SDD_ERR_STRUCTURE otherwise). */
int sdd_recover(const sdd_expanded* s, sdd_cmatrix** out);
/* Wrap a row-major 2p x 2p buffer. project != 0 projects onto exact block
 * structure (A = (S11+S22)/2, B = (S21-S12)/2); otherwise the buffer must
 * already satisfy it within 1e-8. */
int sdd_expanded_create(const double* data, int64_t dim, int project, sdd_expanded** out);
int64_t sdd_expanded_dim(const sdd_expanded* s);
int sdd_expanded_copy(const sdd_expanded* s, double* buffer);
int sdd_expanded_save_csv(const sdd_expanded* s, const char* path);
int sdd_expanded_load_csv(const char* path, sdd_expanded** out);
void sdd_expanded_free(sdd_expanded* s);

/* --- D-trace loss and solver ---------------------------------------------- */

/* L(D) = 1/4 (<S2 D, D S1> + <S1 D, D S2>) - <D, S2 - S1>, D row-major
 * dim x dim. */
int sdd_dtrace_loss(const double* d, int64_t dim, const sdd_expanded* s1,
                    const sdd_expanded* s2, double* out);
/* dL/dD = (S2 D S1 + S1 D S2)/2 - (S2 - S1), written to a dim x dim buffer. */
int sdd_dtrace_gradient(const double* d, int64_t dim, const sdd_expanded* s1,
                        const sdd_expanded* s2, double* out);
/* Max-norm violation of the l1 subgradient optimality condition. */
int sdd_kkt_residual(const double* d, int64_t dim, const sdd_expanded* s1,
                     const sdd_expanded* s2, double tau, double* out);

typedef struct sdd_solver_options {
    double rho;        /* ADMM penalty parameter (> 0) */
    int64_t max_iters; /* iteration cap; exceeding it is not an error */
    double primal_tol; /* absolute max-norm consensus tolerance */
    double dual_tol;   /* absolute max-norm dual tolerance */
    int symmetrize;    /* replace D with (D + D^T)/2 after solving */
} sdd_solver_options;

/* rho = 1.0, max_iters = 2000, primal_tol = dual_tol = 1e-7, symmetrize = 1 */
sdd_solver_options sdd_solver_options_default(void);

/* Minimize L(D) + tau |D|_1 (penalty on every entry). options may be NULL for
 * defaults. Non-convergence is reported through sdd_estimate_converged, not a
 * status code. */
int sdd_solve(const sdd_expanded* s1, const sdd_expanded* s2, double tau,
              const sdd_solver_options* options, sdd_estimate** out);

int64_t sdd_estimate_dim(const sdd_estimate* e);
double sdd_estimate_tau(const sdd_estimate* e);
int64_t sdd_estimate_iterations(const sdd_estimate* e);
int sdd_estimate_converged(const sdd_estimate* e);
/* KKT residual of the returned iterate; NaN for baseline estimates. */
double sdd_estimate_kkt(const sdd_estimate* e);
/* The expanded difference (new handle). */
int sdd_estimate_expanded(const sdd_estimate* e, sdd_expanded** out);
/* The recovered complex difference (new handle). */
int sdd_estimate_complex(const sdd_estimate* e, sdd_cmatrix** out);
/* Entries with |value| > threshold in the upper triangles (with diagonals) of
 * the leading p x p and upper-right p x p blocks. */
int sdd_count_edges(const sdd_estimate* e, double threshold, int64_t* out);
void sdd_estimate_free(sdd_estimate* e);

/* --- tuning ---------------------------------------------------------------- */

/* 2 * max|S1 - S2|; the smallest penalty whose solution is exactly zero. */
int sdd_tau_max(const sdd_expanded* s1, const sdd_expanded* s2, double* out);
/* k log-linear penalties from 0.001 tau_max to tau_max, descending. */
int sdd_penalty_path(const sdd_expanded* s1, const sdd_expanded* s2, int64_t k, double* taus);
/* Extended BIC of an estimate; p_channels is the original channel count p. */
int sdd_ebic(const sdd_estimate* e, const sdd_expanded* s1, const sdd_expanded* s2,
             int64_t n1, int64_t n2, double gamma, int64_t p_channels, double* out);

typedef struct sdd_tuning_record {
    double tau;
    int64_t edge_count;
    double ebic;
    int converged;
} sdd_tuning_record;

/* Solve the k-point penalty path (warm-started, descending) and select the
 * eBIC minimizer; non-converged points are excluded unless all are, ties go
 * to the larger tau. */
int sdd_solve_path(const sdd_expanded* s1, const sdd_expanded* s2, int64_t n1, int64_t n2,
                   double gamma, int64_t p_channels, int64_t k,
                   const sdd_solver_options* options, sdd_path** out);
int64_t sdd_path_length(const sdd_path* path);
int sdd_path_records(const sdd_path* path, sdd_tuning_record* records);
int64_t sdd_path_selected(const sdd_path* path);
/* The estimate at the selected point (new handle). */
int sdd_path_estimate(const sdd_path* path, sdd_estimate** out);
void sdd_path_free(sdd_path* path);

/* --- baselines -------------------------------------------------------------- */

/* S1^-1 - S2^-1. Both inputs need minimum eigenvalue > 1e-10
 * (SDD_ERR_SINGULAR otherwise; no pseudo-inverse fallback). */
int sdd_naive_difference(const sdd_expanded* s1, const sdd_expanded* s2, sdd_estimate** out);
/* Copy with entries |value| <= t zeroed. */
int sdd_hard_threshold(const sdd_estimate* e, double t, sdd_estimate** out);
/* k geometric thresholds between the smallest and largest nonzero |entry|,
 * ascending. */
int sdd_threshold_path(const sdd_estimate* e, int64_t k, double* thresholds);
/* Score every threshold with the same eBIC and keep the minimizer (record tau
 * fields hold thresholds). */
int sdd_hard_threshold_select(const sdd_estimate* e, const sdd_expanded* s1,
                              const sdd_expanded* s2, int64_t n1, int64_t n2, double gamma,
                              int64_t p_channels, int64_t k, sdd_path** out);

/* --- VAR(1) simulation ------------------------------------------------------- */

/* Wrap a p x p row-major transition matrix; spectral radius must be < 1. */
int sdd_var_model_create(const double* a, int64_t p, sdd_var_model** out);
int64_t sdd_var_model_dim(const sdd_var_model* m);
int sdd_var_model_copy(const sdd_var_model* m, double* a);
int sdd_var_model_spectral_radius(const sdd_var_model* m, double* out);
/* Benchmark settings 1-3 (p = 54); the second condition negates the final
 * 3 x 3 block. retries/rescaled report the stability safeguard for the random
 * settings (may be NULL). */
int sdd_setting_build(int setting, uint64_t seed, sdd_var_model** a1, sdd_var_model** a2,
                      int64_t* retries, int* rescaled);
/* n rows of x_t = A x_{t-1} + N(0, I) after discarding burn_in rows, x_0 = 0.
 * Bit-reproducible for a given seed. */
int sdd_var_simulate(const sdd_var_model* m, int64_t n, int64_t burn_in, uint64_t seed,
                     sdd_panel** out);
/* f(lambda) = (2 pi)^-1 (I - A e^{-i lambda})^-1 (...)^-H. */
int sdd_var_true_spectrum(const sdd_var_model* m, double lambda, sdd_cmatrix** out);
/* Expanded difference of the true inverse spectral densities. */
int sdd_var_true_difference(const sdd_var_model* m1, const sdd_var_model* m2, double lambda,
                            sdd_expanded** out);
void sdd_var_model_free(sdd_var_model* m);

/* --- metrics ------------------------------------------------------------------ */

typedef struct sdd_metrics {
    int64_t tp, fp, tn, fn;
    int64_t n_true_edges, n_est_edges;
    double accuracy;
    double precision; /* meaningful only when the matching _defined flag is 1 */
    double recall;
    double rrmse;
    int precision_defined;
    int recall_defined;
    int rrmse_defined;
} sdd_metrics;

/* Classify all (2p)^2 entries of estimate vs truth at |value| > edge_tol. */
int sdd_score(const sdd_expanded* estimate, const sdd_expanded* truth, double edge_tol,
              sdd_metrics* out);

typedef struct sdd_metric_summary {
    double mean;
    double se;       /* sample sd / sqrt(count); 0 when count <= 1 */
    int64_t count;   /* frequencies where the metric was defined */
    int64_t skipped; /* frequencies where it was undefined */
} sdd_metric_summary;

typedef struct sdd_metrics_summary {
    sdd_metric_summary precision, recall, accuracy, rrmse;
    sdd_metric_summary true_edges, est_edges;
} sdd_metrics_summary;

/* Aggregate per-frequency reports; undefined values are skipped, not zeroed. */
int sdd_metrics_aggregate(const sdd_metrics* reports, int64_t count, sdd_metrics_summary* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SDD_H */
