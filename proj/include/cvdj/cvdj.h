/* cvdj: exact simulation of the two-valued promise-decision algorithm on
 * qubits and its continuous-variable analogue (top-hat momentum substrates,
 * closed-form position densities, window measurements, query amplification).
 *
 * Conventions:
 *  - Every fallible call returns a cvdj_status; outputs are written through
 *    pointers only on CVDJ_OK.
 *  - cvdj_last_error() describes the most recent failure on the calling
 *    thread.
 *  - Objects returned through cvdj_*_new/parse are owned by the caller and
 *    released with the matching *_free (NULL is tolerated).
 */
#ifndef CVDJ_H
#define CVDJ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cvdj_status {
    CVDJ_OK = 0,
    CVDJ_ERROR_INVALID_ARGUMENT = 1, /* bad value or precondition violation */
    CVDJ_ERROR_LIMIT_EXCEEDED = 2,   /* enumeration or size cap hit */
    CVDJ_ERROR_NO_CONVERGENCE = 3,   /* numeric routine missed its tolerance */
    CVDJ_ERROR_INTERNAL = 4
} cvdj_status;

const char* cvdj_version(void);
const char* cvdj_status_name(cvdj_status status);
const char* cvdj_last_error(void);

/* ------------------------------------------------------------------ */
/* Oracle settings (bit strings)                                      */
/* ------------------------------------------------------------------ */

typedef enum cvdj_promise_class {
    CVDJ_PROMISE_CONSTANT = 0,
    CVDJ_PROMISE_BALANCED = 1,
    CVDJ_PROMISE_NEITHER = 2
} cvdj_promise_class;

typedef struct cvdj_bitstring cvdj_bitstring;

/* Parses a string over {'0','1'}; leftmost character is bit 0. */
cvdj_status cvdj_bitstring_parse(const char* text, cvdj_bitstring** out);
void cvdj_bitstring_free(cvdj_bitstring* z);
size_t cvdj_bitstring_length(const cvdj_bitstring* z);
/* Copies the textual form plus a terminator into buffer (size must be at
 * least length + 1). */
cvdj_status cvdj_bitstring_text(const cvdj_bitstring* z, char* buffer, size_t buffer_size);
cvdj_promise_class cvdj_bitstring_classify(const cvdj_bitstring* z);
cvdj_status cvdj_bitstring_complement(const cvdj_bitstring* z, cvdj_bitstring** out);
/* The two block settings 0..01..1 and 1..10..0 of even length bit_count. */
cvdj_status cvdj_asb_pair(size_t bit_count, cvdj_bitstring** low_block,
                          cvdj_bitstring** high_block);

/* Lexicographic enumeration of all balanced settings of a given length
 * (refused above length 24). */
typedef struct cvdj_balanced_iter cvdj_balanced_iter;
cvdj_status cvdj_balanced_iter_new(size_t bit_count, cvdj_balanced_iter** out);
/* Returns 1 and fills *out while settings remain, 0 at the end. */
int cvdj_balanced_iter_next(cvdj_balanced_iter* it, cvdj_bitstring** out);
void cvdj_balanced_iter_free(cvdj_balanced_iter* it);

/* ------------------------------------------------------------------ */
/* Qubit-register run                                                 */
/* ------------------------------------------------------------------ */

/* Probability of reading the all-zeros register after the interference
 * circuit driven by the phase oracle of z (length must be a power of two,
 * at most 2^20).  qubit_count may be NULL. */
cvdj_status cvdj_dv_run(const cvdj_bitstring* z, uint32_t* qubit_count, double* prob_zero);

/* ------------------------------------------------------------------ */
/* Continuous-variable encoding and densities                         */
/* ------------------------------------------------------------------ */

/* Midpoint samples of the encoded momentum wavefunction over [-P, P].
 * sample_count must be a power of two, >= 4N, and divisible by N; momenta
 * and values must hold sample_count doubles each (either may be NULL). */
cvdj_status cvdj_encoded_momentum_samples(const cvdj_bitstring* z, double half_extent,
                                          uint32_t sample_count, double* momenta,
                                          double* values);

/* Closed-form position wavefunction at one point. */
cvdj_status cvdj_wavefunction_eval(const cvdj_bitstring* z, double half_extent, double x,
                                   double* out_re, double* out_im);

/* Position density on a uniform grid of point_count points spanning
 * [x_min, x_max]; xs may be NULL. */
cvdj_status cvdj_pdf_samples(const cvdj_bitstring* z, double half_extent, double x_min,
                             double x_max, uint32_t point_count, double* xs,
                             double* densities);

/* The bit_count phasor angles at position x (slot order). */
cvdj_status cvdj_phasor_angles(uint32_t bit_count, double half_extent, double x,
                               double* angles);

/* Midpoint-rule inverse Fourier transform of the sampled momentum signal
 * compared against the analytic form on [-position_window, position_window].
 * resolution_warning is set when sample_count < 64 * N. */
cvdj_status cvdj_fft_crosscheck(const cvdj_bitstring* z, double half_extent,
                                uint32_t sample_count, double position_window,
                                double* max_deviation, int* resolution_warning);

/* ------------------------------------------------------------------ */
/* Window measurement                                                 */
/* ------------------------------------------------------------------ */

double cvdj_sine_integral(double t);

/* Detection probability in [-delta, delta] for the setting's density,
 * by adaptive quadrature. */
cvdj_status cvdj_window_probability(const cvdj_bitstring* z, double half_extent, double delta,
                                    double* prob);
/* Closed forms for the constant and block settings. */
cvdj_status cvdj_constant_window_prob(double half_extent, double delta, double* prob);
cvdj_status cvdj_asb_window_prob(double half_extent, double delta, double* prob);
/* Window half-width maximizing the detection separation (= pi/(2P)). */
cvdj_status cvdj_optimal_delta(double half_extent, double* delta);

/* ------------------------------------------------------------------ */
/* Dominance of the block pair                                        */
/* ------------------------------------------------------------------ */

typedef struct cvdj_dominance_report {
    int holds;
    /* min over non-block balanced settings and grid x > 0 of
     * |S_block| - |S_g|; 0 when N = 2 leaves no competitor. */
    double worst_margin;
    int has_witness;
    char witness_bits[64 + 1];
    double witness_x;
    double witness_excess;
    uint64_t strings_checked;
    uint64_t grid_points;
} cvdj_dominance_report;

/* Brute-force check over all balanced settings (bit_count <= 16) on a
 * uniform grid of grid_points positions spanning [0, pi/2]. */
cvdj_status cvdj_verify_asb_dominance(uint32_t bit_count, uint32_t grid_points,
                                      cvdj_dominance_report* out);

/* ------------------------------------------------------------------ */
/* Query amplification and classical baselines                        */
/* ------------------------------------------------------------------ */

typedef struct cvdj_query_model {
    double p_detect_constant; /* must exceed 1/2 */
    double p_detect_balanced; /* must be below 1/2 */
    int illustrative;
} cvdj_query_model;

/* Window probabilities at the optimal window (P delta = pi/2). */
cvdj_status cvdj_query_model_optimal(cvdj_query_model* out);
/* The round-number model (3/4, 1/4). */
cvdj_status cvdj_query_model_illustrative(cvdj_query_model* out);

/* Detections over `queries` Bernoulli trials; truth is a
 * cvdj_promise_class (CONSTANT or BALANCED).  Reproducible by
 * (seed, truth, run_index). */
cvdj_status cvdj_run_trials(const cvdj_query_model* model, int truth, uint64_t queries,
                            uint64_t seed, uint64_t run_index, uint64_t* detections);
/* Majority vote; ties decide balanced.  Returns a cvdj_promise_class. */
int cvdj_decide(uint64_t detections, uint64_t queries);

double cvdj_chernoff_lower(double mu, double eps);
double cvdj_chernoff_upper(double mu, double eps);
/* 1 - exp(-m/24). */
double cvdj_success_bound(uint64_t queries);

typedef struct cvdj_amplification_report {
    int truth; /* cvdj_promise_class */
    uint64_t queries;
    uint64_t runs;
    uint64_t seed;
    uint64_t first_run_detections;
    int first_run_decision; /* cvdj_promise_class */
    uint64_t error_count;
    double empirical_error;
    double chernoff_bound;
} cvdj_amplification_report;

/* Monte-Carlo majority-vote error under both truths; reports[0] holds the
 * constant ground truth, reports[1] the balanced one. */
cvdj_status cvdj_monte_carlo_error(const cvdj_query_model* model, uint64_t queries,
                                   uint64_t runs, uint64_t seed,
                                   cvdj_amplification_report reports[2]);

typedef struct cvdj_deterministic_result {
    int decision; /* cvdj_promise_class */
    uint64_t queries_used;
    int promise_satisfied;
} cvdj_deterministic_result;

/* Sequential classical queries: balanced on the first mismatch, constant
 * after N/2 + 1 equal answers. */
cvdj_status cvdj_classical_deterministic(const cvdj_bitstring* z,
                                         cvdj_deterministic_result* out);

/* Exact success probability of `queries` distinct random classical queries
 * (1 <= queries <= N/2) and the 1 - 2^{-m} lower bound.  Either output may
 * be NULL. */
cvdj_status cvdj_classical_probabilistic_bound(uint64_t bit_count, uint64_t queries,
                                               double* exact, double* lower_bound);

#ifdef __cplusplus
}
#endif

#endif /* CVDJ_H */
