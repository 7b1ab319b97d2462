#include "cvdj/cvdj.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "amplification.hpp"
#include "bitstring.hpp"
#include "dv_circuit.hpp"
#include "errors.hpp"
#include "momentum_encoding.hpp"
#include "phasor_dominance.hpp"
#include "sine_integral.hpp"
#include "wavefunction.hpp"
#include "window_measure.hpp"

struct cvdj_bitstring {
    cvdj::BitString value;
};

struct cvdj_balanced_iter {
    cvdj::BalancedEnumerator it;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown error"; }

// Runs fn, translating C++ exceptions into status codes + thread-local text.
template <typename Fn>
cvdj_status guarded(Fn&& fn) {
    try {
        fn();
        return CVDJ_OK;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return CVDJ_ERROR_INVALID_ARGUMENT;
    } catch (const cvdj::LimitError& e) {
        set_error(e.what());
        return CVDJ_ERROR_LIMIT_EXCEEDED;
    } catch (const cvdj::ConvergenceError& e) {
        set_error(e.what());
        return CVDJ_ERROR_NO_CONVERGENCE;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return CVDJ_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return CVDJ_ERROR_INTERNAL;
    }
}

cvdj_status require(bool ok, const char* what) {
    if (ok) return CVDJ_OK;
    set_error(what);
    return CVDJ_ERROR_INVALID_ARGUMENT;
}

int promise_to_int(cvdj::PromiseClass c) {
    switch (c) {
        case cvdj::PromiseClass::Constant: return CVDJ_PROMISE_CONSTANT;
        case cvdj::PromiseClass::Balanced: return CVDJ_PROMISE_BALANCED;
        case cvdj::PromiseClass::Neither: return CVDJ_PROMISE_NEITHER;
    }
    return CVDJ_PROMISE_NEITHER;
}

int truth_to_int(cvdj::Truth t) {
    return t == cvdj::Truth::Constant ? CVDJ_PROMISE_CONSTANT : CVDJ_PROMISE_BALANCED;
}

cvdj_status truth_from_int(int value, cvdj::Truth* out) {
    if (value == CVDJ_PROMISE_CONSTANT) {
        *out = cvdj::Truth::Constant;
        return CVDJ_OK;
    }
    if (value == CVDJ_PROMISE_BALANCED) {
        *out = cvdj::Truth::Balanced;
        return CVDJ_OK;
    }
    set_error("truth must be the constant or balanced promise class");
    return CVDJ_ERROR_INVALID_ARGUMENT;
}

void fill_report(const cvdj::AmplificationReport& in, cvdj_amplification_report* out) {
    out->truth = truth_to_int(in.truth);
    out->queries = in.queries;
    out->runs = in.runs;
    out->seed = in.seed;
    out->first_run_detections = in.first_run_detections;
    out->first_run_decision = truth_to_int(in.first_run_decision);
    out->error_count = in.error_count;
    out->empirical_error = in.empirical_error;
    out->chernoff_bound = in.chernoff_bound;
}

}  // namespace

extern "C" {

const char* cvdj_version(void) { return "0.1.0"; }

const char* cvdj_status_name(cvdj_status status) {
    switch (status) {
        case CVDJ_OK: return "ok";
        case CVDJ_ERROR_INVALID_ARGUMENT: return "invalid_argument";
        case CVDJ_ERROR_LIMIT_EXCEEDED: return "limit_exceeded";
        case CVDJ_ERROR_NO_CONVERGENCE: return "no_convergence";
        case CVDJ_ERROR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* cvdj_last_error(void) { return g_last_error.c_str(); }

cvdj_status cvdj_bitstring_parse(const char* text, cvdj_bitstring** out) {
    if (auto st = require(text && out, "text and out must be non-null")) return st;
    return guarded([&] { *out = new cvdj_bitstring{cvdj::BitString::parse(text)}; });
}

void cvdj_bitstring_free(cvdj_bitstring* z) { delete z; }

size_t cvdj_bitstring_length(const cvdj_bitstring* z) { return z ? z->value.size() : 0; }

cvdj_status cvdj_bitstring_text(const cvdj_bitstring* z, char* buffer, size_t buffer_size) {
    if (auto st = require(z && buffer, "bit string and buffer must be non-null")) return st;
    const std::string s = z->value.str();
    if (auto st = require(buffer_size >= s.size() + 1, "buffer too small for bit string text"))
        return st;
    std::memcpy(buffer, s.c_str(), s.size() + 1);
    return CVDJ_OK;
}

cvdj_promise_class cvdj_bitstring_classify(const cvdj_bitstring* z) {
    if (!z) return CVDJ_PROMISE_NEITHER;
    return static_cast<cvdj_promise_class>(promise_to_int(cvdj::classify(z->value)));
}

cvdj_status cvdj_bitstring_complement(const cvdj_bitstring* z, cvdj_bitstring** out) {
    if (auto st = require(z && out, "bit string and out must be non-null")) return st;
    return guarded([&] { *out = new cvdj_bitstring{z->value.complement()}; });
}

cvdj_status cvdj_asb_pair(size_t bit_count, cvdj_bitstring** low_block,
                          cvdj_bitstring** high_block) {
    if (auto st = require(low_block && high_block, "output pointers must be non-null")) return st;
    return guarded([&] {
        auto [low, high] = cvdj::asb_pair(bit_count);
        *low_block = new cvdj_bitstring{std::move(low)};
        *high_block = new cvdj_bitstring{std::move(high)};
    });
}

cvdj_status cvdj_balanced_iter_new(size_t bit_count, cvdj_balanced_iter** out) {
    if (auto st = require(out != nullptr, "out must be non-null")) return st;
    return guarded([&] { *out = new cvdj_balanced_iter{cvdj::BalancedEnumerator(bit_count)}; });
}

int cvdj_balanced_iter_next(cvdj_balanced_iter* it, cvdj_bitstring** out) {
    if (!it || !out) return 0;
    auto z = it->it.next();
    if (!z) return 0;
    *out = new cvdj_bitstring{std::move(*z)};
    return 1;
}

void cvdj_balanced_iter_free(cvdj_balanced_iter* it) { delete it; }

cvdj_status cvdj_dv_run(const cvdj_bitstring* z, uint32_t* qubit_count, double* prob_zero) {
    if (auto st = require(z && prob_zero, "bit string and prob_zero must be non-null")) return st;
    return guarded([&] {
        const cvdj::ReducedOracle oracle(z->value);
        if (qubit_count) *qubit_count = static_cast<uint32_t>(oracle.qubit_count());
        *prob_zero = cvdj::dj_run(z->value);
    });
}

cvdj_status cvdj_encoded_momentum_samples(const cvdj_bitstring* z, double half_extent,
                                          uint32_t sample_count, double* momenta,
                                          double* values) {
    if (auto st = require(z != nullptr, "bit string must be non-null")) return st;
    return guarded([&] {
        const cvdj::CvParams params(z->value.size(), half_extent);
        const cvdj::MomentumSignal signal(z->value, params);
        const cvdj::GridSamples samples = cvdj::grid_sample(signal, sample_count);
        for (uint32_t k = 0; k < sample_count; ++k) {
            if (momenta) momenta[k] = samples.points[k];
            if (values) values[k] = samples.values[k];
        }
    });
}

cvdj_status cvdj_wavefunction_eval(const cvdj_bitstring* z, double half_extent, double x,
                                   double* out_re, double* out_im) {
    if (auto st = require(z && out_re && out_im, "outputs must be non-null")) return st;
    return guarded([&] {
        const cvdj::CvParams params(z->value.size(), half_extent);
        const cvdj::PositionWavefunction wf(z->value, params);
        const cvdj::Complex v = wf(x);
        *out_re = v.real();
        *out_im = v.imag();
    });
}

cvdj_status cvdj_pdf_samples(const cvdj_bitstring* z, double half_extent, double x_min,
                             double x_max, uint32_t point_count, double* xs,
                             double* densities) {
    if (auto st = require(z && densities, "bit string and densities must be non-null")) return st;
    if (auto st = require(point_count >= 2, "point count must be at least 2")) return st;
    if (auto st = require(x_min < x_max, "x_min must be below x_max")) return st;
    return guarded([&] {
        const cvdj::CvParams params(z->value.size(), half_extent);
        const cvdj::PositionWavefunction wf(z->value, params);
        const cvdj::Pdf density = cvdj::pdf(wf);
        for (uint32_t i = 0; i < point_count; ++i) {
            const double x = x_min + (x_max - x_min) * static_cast<double>(i) /
                                         static_cast<double>(point_count - 1);
            if (xs) xs[i] = x;
            densities[i] = density(x);
        }
    });
}

cvdj_status cvdj_phasor_angles(uint32_t bit_count, double half_extent, double x,
                               double* angles) {
    if (auto st = require(angles != nullptr, "angles must be non-null")) return st;
    return guarded([&] {
        const auto values = cvdj::phasor_angles(bit_count, half_extent, x);
        for (size_t j = 0; j < values.size(); ++j) angles[j] = values[j];
    });
}

cvdj_status cvdj_fft_crosscheck(const cvdj_bitstring* z, double half_extent,
                                uint32_t sample_count, double position_window,
                                double* max_deviation, int* resolution_warning) {
    if (auto st = require(z && max_deviation, "bit string and max_deviation must be non-null"))
        return st;
    return guarded([&] {
        const cvdj::CvParams params(z->value.size(), half_extent);
        const cvdj::CrosscheckResult r =
            cvdj::fft_crosscheck(z->value, params, sample_count, position_window);
        *max_deviation = r.max_deviation;
        if (resolution_warning) *resolution_warning = r.resolution_warning ? 1 : 0;
    });
}

double cvdj_sine_integral(double t) { return cvdj::sine_integral(t); }

cvdj_status cvdj_window_probability(const cvdj_bitstring* z, double half_extent, double delta,
                                    double* prob) {
    if (auto st = require(z && prob, "bit string and prob must be non-null")) return st;
    return guarded([&] {
        const cvdj::CvParams params(z->value.size(), half_extent);
        const cvdj::PositionWavefunction wf(z->value, params);
        *prob = cvdj::window_probability(cvdj::pdf(wf), cvdj::Window(delta));
    });
}

cvdj_status cvdj_constant_window_prob(double half_extent, double delta, double* prob) {
    if (auto st = require(prob != nullptr, "prob must be non-null")) return st;
    return guarded([&] { *prob = cvdj::constant_window_prob(half_extent, delta); });
}

cvdj_status cvdj_asb_window_prob(double half_extent, double delta, double* prob) {
    if (auto st = require(prob != nullptr, "prob must be non-null")) return st;
    return guarded([&] { *prob = cvdj::asb_window_prob(half_extent, delta); });
}

cvdj_status cvdj_optimal_delta(double half_extent, double* delta) {
    if (auto st = require(delta != nullptr, "delta must be non-null")) return st;
    return guarded([&] { *delta = cvdj::optimal_delta(half_extent); });
}

cvdj_status cvdj_verify_asb_dominance(uint32_t bit_count, uint32_t grid_points,
                                      cvdj_dominance_report* out) {
    if (auto st = require(out != nullptr, "out must be non-null")) return st;
    return guarded([&] {
        const cvdj::DominanceReport r = cvdj::verify_asb_dominance(bit_count, grid_points);
        out->holds = r.holds ? 1 : 0;
        out->worst_margin = r.worst_margin;
        out->has_witness = r.witness ? 1 : 0;
        out->witness_bits[0] = '\0';
        out->witness_x = 0.0;
        out->witness_excess = 0.0;
        if (r.witness) {
            const std::string bits = r.witness->setting.str();
            const size_t len = bits.size() < 64 ? bits.size() : 64;
            std::memcpy(out->witness_bits, bits.c_str(), len);
            out->witness_bits[len] = '\0';
            out->witness_x = r.witness->position;
            out->witness_excess = r.witness->excess;
        }
        out->strings_checked = r.strings_checked;
        out->grid_points = r.grid_points;
    });
}

cvdj_status cvdj_query_model_optimal(cvdj_query_model* out) {
    if (auto st = require(out != nullptr, "out must be non-null")) return st;
    return guarded([&] {
        const cvdj::QueryModel m = cvdj::QueryModel::optimal();
        *out = {m.p_detect_constant, m.p_detect_balanced, m.illustrative ? 1 : 0};
    });
}

cvdj_status cvdj_query_model_illustrative(cvdj_query_model* out) {
    if (auto st = require(out != nullptr, "out must be non-null")) return st;
    return guarded([&] {
        const cvdj::QueryModel m = cvdj::QueryModel::illustrative_model();
        *out = {m.p_detect_constant, m.p_detect_balanced, m.illustrative ? 1 : 0};
    });
}

cvdj_status cvdj_run_trials(const cvdj_query_model* model, int truth, uint64_t queries,
                            uint64_t seed, uint64_t run_index, uint64_t* detections) {
    if (auto st = require(model && detections, "model and detections must be non-null")) return st;
    cvdj::Truth t;
    if (auto st = truth_from_int(truth, &t)) return st;
    return guarded([&] {
        const cvdj::QueryModel m(model->p_detect_constant, model->p_detect_balanced,
                                 model->illustrative != 0);
        *detections = cvdj::run_trials(m, t, queries, seed, run_index);
    });
}

int cvdj_decide(uint64_t detections, uint64_t queries) {
    if (queries == 0) return CVDJ_PROMISE_NEITHER;
    return truth_to_int(cvdj::decide(detections, queries));
}

double cvdj_chernoff_lower(double mu, double eps) {
    return cvdj::chernoff_lower(mu, eps);
}

double cvdj_chernoff_upper(double mu, double eps) {
    return cvdj::chernoff_upper(mu, eps);
}

double cvdj_success_bound(uint64_t queries) { return cvdj::success_bound(queries); }

cvdj_status cvdj_monte_carlo_error(const cvdj_query_model* model, uint64_t queries,
                                   uint64_t runs, uint64_t seed,
                                   cvdj_amplification_report reports[2]) {
    if (auto st = require(model && reports, "model and reports must be non-null")) return st;
    return guarded([&] {
        const cvdj::QueryModel m(model->p_detect_constant, model->p_detect_balanced,
                                 model->illustrative != 0);
        const auto [constant_rep, balanced_rep] =
            cvdj::monte_carlo_error(m, queries, runs, seed);
        fill_report(constant_rep, &reports[0]);
        fill_report(balanced_rep, &reports[1]);
    });
}

cvdj_status cvdj_classical_deterministic(const cvdj_bitstring* z,
                                         cvdj_deterministic_result* out) {
    if (auto st = require(z && out, "bit string and out must be non-null")) return st;
    return guarded([&] {
        const cvdj::DeterministicRunResult r = cvdj::classical_deterministic(z->value);
        out->decision = promise_to_int(r.decision);
        out->queries_used = r.queries_used;
        out->promise_satisfied = r.promise_satisfied ? 1 : 0;
    });
}

cvdj_status cvdj_classical_probabilistic_bound(uint64_t bit_count, uint64_t queries,
                                               double* exact, double* lower_bound) {
    return guarded([&] {
        const double p = cvdj::classical_probabilistic_bound(bit_count, queries);
        if (exact) *exact = p;
        if (lower_bound) {
            *lower_bound = 1.0 - std::exp2(-static_cast<double>(queries));
        }
    });
}

}  // extern "C"
