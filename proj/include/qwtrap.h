/*
 * qwtrap -- conditional-measurement entanglement simulator for emitters
 * coupled through one cavity mode.
 *
 * C interface of the shared library. All functions return qwt_status;
 * results are delivered through out-parameters or opaque handles that the
 * caller frees with the matching *_free function. On failure the thread-local
 * message from qwt_last_error() describes the problem.
 *
 * State descriptors accepted by the protocol entry points:
 *   w1 | w2 | phi | vacuum | mixed | singlet:i,j | ket:<bits>
 * where <bits> lists every emitter, leftmost = emitter 0 (ket:100 excites
 * emitter 0 of three).
 */
#ifndef QWTRAP_H
#define QWTRAP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qwt_status {
  QWT_OK = 0,
  QWT_ERR_PARAM = 1,   /* invalid argument or descriptor */
  QWT_ERR_NUMERIC = 2, /* solver failure or numerically extinct path */
  QWT_ERR_IO = 3       /* file could not be written */
} qwt_status;

const char* qwt_version(void);
const char* qwt_last_error(void);

/* ---- scalar closed forms ------------------------------------------------ */

/* Evaluates expressions built from numbers, pi, sqrt(), + - * / and parens. */
qwt_status qwt_eval_theta(const char* expr, double* out);

/* k-th evolution time at which the W1 conditional eigenvalue has unit
 * magnitude: k*pi/sqrt(4n-2). */
qwt_status qwt_node_time(int n, int k, double* out);

/* Success probability and fidelity of the single-photon protocol after
 * `reps` successful rounds. */
qwt_status qwt_closed_pf(int n, double theta, int reps, double* p, double* f);

/* Two-emitter protocol monitored on m photons. `as_printed` selects the
 * uncorrected fidelity variant 1/(2 c^{2N}). */
qwt_status qwt_closed_pf_two_qw(int m, double theta, int reps, int as_printed,
                                double* p, double* f);

/* kind: "w1" | "bright_t" | "vacuum_2photon" */
qwt_status qwt_superop_eigenvalue(const char* kind, int n, double theta,
                                  double* out);

/* Three-state chain amplitudes (mid, up, down) for two total quanta. */
qwt_status qwt_chain_amplitudes(int n, double t, double re[3], double im[3]);

/* Product of the cumulative success probabilities P_0..P_reps. */
qwt_status qwt_purification_yield(int n, double theta, int reps, double* out);

/* Max-norm defect of sum_p K^dagger K - identity. */
qwt_status qwt_completeness_defect(int n, int p_in, double theta, double* out);

/* Free Rabi amplitudes for one or two total quanta: out_re/out_im hold
 * (stay on W1 chain center, all quanta in cavity, two-excitation floor). */
qwt_status qwt_rabi_amplitudes(int n, int quanta, double t, double re[3],
                               double im[3]);

/* ---- protocol traces ----------------------------------------------------- */

typedef struct qwt_trace qwt_trace;

/* Repeated conditional measurement of `monitor` photons. */
qwt_status qwt_protocol_run(int n, double theta, int reps, int monitor,
                            const char* initial, const char* target,
                            qwt_trace** out);

/* Two-photon initialization protocol (monitor = 2, target = vacuum). */
qwt_status qwt_initialize_run(int n, double theta, int reps,
                              const char* initial, qwt_trace** out);

int qwt_trace_length(const qwt_trace* trace);
/* 1 when the success weight underflowed and the trace was truncated. */
int qwt_trace_extinct(const qwt_trace* trace);
qwt_status qwt_trace_row(const qwt_trace* trace, int i, double* p, double* f,
                         double* y);
/* format: "csv" (header N,P,F,Y) or "json". */
qwt_status qwt_trace_write(const qwt_trace* trace, const char* path,
                           const char* format);
void qwt_trace_free(qwt_trace* trace);

/* ---- Monte Carlo trajectories -------------------------------------------- */

typedef struct qwt_stats qwt_stats;

qwt_status qwt_trajectories_run(int n, double theta, int reps, int monitor,
                                const char* initial, long samples,
                                uint64_t seed, qwt_stats** out);

long qwt_stats_samples(const qwt_stats* stats);
long qwt_stats_successes(const qwt_stats* stats);
double qwt_stats_rate(const qwt_stats* stats);
double qwt_stats_stderr(const qwt_stats* stats);
/* format: "json" or "csv" (step-resolved outcome histogram). */
qwt_status qwt_stats_write(const qwt_stats* stats, const char* path,
                           const char* format);
void qwt_stats_free(qwt_stats* stats);

/* ---- spectra -------------------------------------------------------------- */

typedef struct qwt_spectrum qwt_spectrum;

/* Eigen-analysis of <photons| U(theta) |photons> on the emitter space. */
qwt_status qwt_spectrum_compute(int n, int photons, double theta,
                                double cluster_tol, double unit_tol,
                                qwt_spectrum** out);

int qwt_spectrum_size(const qwt_spectrum* spec);
qwt_status qwt_spectrum_eigenvalue(const qwt_spectrum* spec, int i, double* re,
                                   double* im);
/* Count of eigenvalues with |lambda| >= 1 - unit_tol. */
int qwt_spectrum_unit_count(const qwt_spectrum* spec);
/* Same, restricted to eigenvectors in the k-excitation subspace. */
int qwt_spectrum_unit_count_in_excitation(const qwt_spectrum* spec, int k);
qwt_status qwt_spectrum_write(const qwt_spectrum* spec, const char* path);
void qwt_spectrum_free(qwt_spectrum* spec);

/* ---- figure rendering ----------------------------------------------------- */

/* Fidelity curves with the yield inset for n = 3, 6, 9 at their per-n
 * evolution times (both n = 9 candidates). Deterministic byte output. */
qwt_status qwt_figure2_write(const char* path, int max_reps);

/* Generic chart: one series per label, nx points each. */
qwt_status qwt_chart_write(const char* path, const char* const* labels,
                           const double* const* xs, const double* const* ys,
                           const int* lengths, int series_count,
                           const char* title, const char* x_label,
                           const char* y_label);

/* ---- verification --------------------------------------------------------- */

typedef struct qwt_report qwt_report;

/* Runs the analytic-vs-numeric self-check suite. */
qwt_status qwt_verify_run(qwt_report** out);

int qwt_report_size(const qwt_report* report);
int qwt_report_passed(const qwt_report* report, int i);
const char* qwt_report_name(const qwt_report* report, int i);
/* "observed=... expected=... tol=..." plus check-specific notes. */
const char* qwt_report_detail(const qwt_report* report, int i);
void qwt_report_free(qwt_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QWTRAP_H */
