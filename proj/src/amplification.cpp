#include "amplification.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rng.hpp"
#include "window_measure.hpp"

namespace cvdj {

namespace {

// Stream layout: high 32 bits tag the truth, low 32 bits the run index.
std::uint64_t stream_for(Truth truth, std::uint64_t run_index) {
    const std::uint64_t tag = truth == Truth::Constant ? 0 : 1;
    return (tag << 32) | (run_index & 0xFFFFFFFFu);
}

}  // namespace

const char* to_string(Truth t) {
    return t == Truth::Constant ? "constant" : "balanced";
}

QueryModel::QueryModel(double p_const, double p_bal, bool illustrative_flag)
    : p_detect_constant(p_const), p_detect_balanced(p_bal), illustrative(illustrative_flag) {
    if (!(p_bal >= 0.0) || !(p_bal < 0.5) || !(p_const > 0.5) || !(p_const <= 1.0))
        throw std::invalid_argument(
            "detection probabilities must satisfy 0 <= p_balanced < 1/2 < p_constant <= 1");
}

QueryModel QueryModel::optimal() {
    const double delta_p = std::numbers::pi / 2.0;  // delta * P at the optimum
    return QueryModel(constant_window_prob(1.0, delta_p), asb_window_prob(1.0, delta_p));
}

QueryModel QueryModel::illustrative_model() {
    return QueryModel(0.75, 0.25, true);
}

std::uint64_t run_trials(const QueryModel& model, Truth truth, std::uint64_t queries,
                         std::uint64_t seed, std::uint64_t run_index) {
    if (queries == 0) throw std::invalid_argument("query count must be positive");
    const double p =
        truth == Truth::Constant ? model.p_detect_constant : model.p_detect_balanced;
    CounterRng rng(seed, stream_for(truth, run_index));
    std::uint64_t detections = 0;
    for (std::uint64_t i = 0; i < queries; ++i) detections += rng.bernoulli(p) ? 1 : 0;
    return detections;
}

Truth decide(std::uint64_t detections, std::uint64_t queries) {
    if (queries == 0) throw std::invalid_argument("query count must be positive");
    // Strict majority of detections says constant; the tie goes to balanced.
    return 2 * detections > queries ? Truth::Constant : Truth::Balanced;
}

double chernoff_lower(double mu, double eps) {
    if (!(mu >= 0.0) || !(eps >= 0.0))
        throw std::invalid_argument("Chernoff arguments must be nonnegative");
    return std::exp(-mu * eps * eps / 2.0);
}

double chernoff_upper(double mu, double eps) {
    if (!(mu >= 0.0) || !(eps >= 0.0))
        throw std::invalid_argument("Chernoff arguments must be nonnegative");
    return std::exp(-mu * eps * eps / 4.0);
}

double chernoff_error_bound(const QueryModel& model, Truth truth, std::uint64_t queries) {
    const double m = static_cast<double>(queries);
    if (truth == Truth::Constant) {
        // Error: detections fall to m/2 or below, i.e. under (1 - eps) mu.
        const double p = model.p_detect_constant;
        const double eps = 1.0 - 1.0 / (2.0 * p);
        return chernoff_lower(m * p, eps);
    }
    const double p = model.p_detect_balanced;
    if (p == 0.0) return 0.0;  // no detections can ever exceed m/2
    // Error: detections exceed m/2, i.e. over (1 + eps) mu.
    const double eps = 1.0 / (2.0 * p) - 1.0;
    return chernoff_upper(m * p, eps);
}

double success_bound(std::uint64_t queries) {
    if (queries == 0) throw std::invalid_argument("query count must be positive");
    return 1.0 - std::exp(-static_cast<double>(queries) / 24.0);
}

std::pair<AmplificationReport, AmplificationReport> monte_carlo_error(const QueryModel& model,
                                                                      std::uint64_t queries,
                                                                      std::uint64_t runs,
                                                                      std::uint64_t seed) {
    if (queries == 0) throw std::invalid_argument("query count must be positive");
    if (runs == 0) throw std::invalid_argument("run count must be positive");
    if (runs > 0xFFFFFFFFu) throw std::invalid_argument("run count must fit in 32 bits");
    std::pair<AmplificationReport, AmplificationReport> out{};
    for (Truth truth : {Truth::Constant, Truth::Balanced}) {
        AmplificationReport& rep = truth == Truth::Constant ? out.first : out.second;
        rep.truth = truth;
        rep.queries = queries;
        rep.runs = runs;
        rep.seed = seed;
        rep.chernoff_bound = chernoff_error_bound(model, truth, queries);
        std::uint64_t errors = 0;
        for (std::uint64_t r = 0; r < runs; ++r) {
            const std::uint64_t detections = run_trials(model, truth, queries, seed, r);
            const Truth decision = decide(detections, queries);
            if (r == 0) {
                rep.first_run_detections = detections;
                rep.first_run_decision = decision;
            }
            if (decision != truth) ++errors;
        }
        rep.error_count = errors;
        rep.empirical_error = static_cast<double>(errors) / static_cast<double>(runs);
    }
    return out;
}

DeterministicRunResult classical_deterministic(const BitString& z) {
    const std::size_t n = z.size();
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("bit count N must be even and at least 2");
    const std::uint64_t budget = n / 2 + 1;
    const std::uint8_t first = z.bit(0);
    std::uint64_t used = 1;
    for (std::size_t i = 1; i < budget; ++i) {
        ++used;
        if (z.bit(i) != first)
            return {PromiseClass::Balanced, used, classify(z) != PromiseClass::Neither};
    }
    // N/2 + 1 equal answers leave no room for a balanced split.
    return {PromiseClass::Constant, used, classify(z) != PromiseClass::Neither};
}

double classical_probabilistic_bound(std::uint64_t bit_count, std::uint64_t queries) {
    if (bit_count < 2 || bit_count % 2 != 0)
        throw std::invalid_argument("bit count N must be even and at least 2");
    if (queries < 1 || queries > bit_count / 2)
        throw std::invalid_argument("query count must be between 1 and N/2");
    // Failure = every query hits the same half; accumulate in log space so
    // large m cannot underflow the product.
    double log_fail = 0.0;
    const double nd = static_cast<double>(bit_count);
    for (std::uint64_t j = 1; j <= queries; ++j) {
        const double jm1 = static_cast<double>(j - 1);
        log_fail += std::log((nd / 2.0 - jm1) / (nd - jm1));
    }
    return 1.0 - std::exp(log_fail);
}

}  // namespace cvdj
