#pragma once

#include <cstdint>
#include <utility>

#include "bitstring.hpp"

namespace cvdj {

enum class Truth { Constant, Balanced };

const char* to_string(Truth t);

// Per-query detection probabilities of the window measurement under the two
// ground truths.  Majority voting over m queries needs p_bal < 1/2 < p_const.
struct QueryModel {
    double p_detect_constant;
    double p_detect_balanced;
    bool illustrative = false;

    QueryModel(double p_const, double p_bal, bool illustrative_flag = false);

    // Closed-form window probabilities at the optimal window P delta = pi/2.
    static QueryModel optimal();
    // The worked round-number model (3/4, 1/4); Chernoff sides reduce to
    // exp(-m/24) and exp(-m/16).
    static QueryModel illustrative_model();
};

// Count of detections over m independent queries, reproducible by
// (seed, truth, run_index) regardless of loop sharding.
std::uint64_t run_trials(const QueryModel& model, Truth truth, std::uint64_t queries,
                         std::uint64_t seed, std::uint64_t run_index = 0);

// Majority vote with ties resolved toward Balanced.
Truth decide(std::uint64_t detections, std::uint64_t queries);

// Chernoff tails for a Binomial(mu = m p): deviation below (1-eps) mu and
// above (1+eps) mu respectively.
double chernoff_lower(double mu, double eps);
double chernoff_upper(double mu, double eps);

// Per-truth union bound on the majority-vote error for the given model.
double chernoff_error_bound(const QueryModel& model, Truth truth, std::uint64_t queries);

// 1 - exp(-m/24): the illustrative model's guaranteed success probability.
double success_bound(std::uint64_t queries);

struct AmplificationReport {
    Truth truth;
    std::uint64_t queries;
    std::uint64_t runs;
    std::uint64_t seed;
    std::uint64_t first_run_detections;
    Truth first_run_decision;
    std::uint64_t error_count;
    double empirical_error;
    double chernoff_bound;
};

// Monte-Carlo estimate of the majority-vote error under both truths.
std::pair<AmplificationReport, AmplificationReport> monte_carlo_error(const QueryModel& model,
                                                                      std::uint64_t queries,
                                                                      std::uint64_t runs,
                                                                      std::uint64_t seed);

// Classical baselines -------------------------------------------------------

struct DeterministicRunResult {
    PromiseClass decision;
    std::uint64_t queries_used;
    bool promise_satisfied;
};

// Query values in order until two differ or N/2 + 1 queries agree.
DeterministicRunResult classical_deterministic(const BitString& z);

// Exact success probability of m distinct random classical queries against
// the worst-case balanced setting, and its 1 - 2^{-m} lower bound.  Computed
// in log space; requires 1 <= m <= N/2.
double classical_probabilistic_bound(std::uint64_t bit_count, std::uint64_t queries);

}  // namespace cvdj
