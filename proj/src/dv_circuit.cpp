#include "dv_circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cvdj {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int log2_exact(std::size_t v) {
    int n = 0;
    while ((std::size_t{1} << n) < v) ++n;
    return n;
}

}  // namespace

DvState::DvState(int qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count < 1 || qubit_count > kMaxQubits)
        throw std::invalid_argument("qubit count must be between 1 and " +
                                    std::to_string(kMaxQubits));
    amps_.assign(std::size_t{1} << qubit_count, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

double DvState::norm_squared() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return s;
}

DvState prepare_uniform(int qubit_count) {
    DvState state(qubit_count);
    const double amp = 1.0 / std::sqrt(static_cast<double>(state.dimension()));
    for (Complex& a : state.amplitudes()) a = Complex{amp, 0.0};
    return state;
}

ReducedOracle::ReducedOracle(const BitString& z) {
    if (z.size() < 2 || !is_power_of_two(z.size()))
        throw std::invalid_argument("length must be a power of two");
    qubit_count_ = log2_exact(z.size());
    if (qubit_count_ > kMaxQubits)
        throw std::invalid_argument("qubit count must be between 1 and " +
                                    std::to_string(kMaxQubits));
    signs_.resize(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) signs_[i] = z.sign(i);
}

void apply_reduced_oracle(DvState& state, const ReducedOracle& oracle) {
    if (oracle.qubit_count() != state.qubit_count())
        throw std::invalid_argument("oracle and state qubit counts must match");
    auto& amps = state.amplitudes();
    const auto& signs = oracle.signs();
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= signs[i];
}

void walsh_hadamard(DvState& state) {
    auto& amps = state.amplitudes();
    const std::size_t dim = amps.size();
    for (std::size_t half = 1; half < dim; half <<= 1) {
        for (std::size_t start = 0; start < dim; start += half << 1) {
            for (std::size_t i = start; i < start + half; ++i) {
                const Complex a = amps[i];
                const Complex b = amps[i + half];
                amps[i] = a + b;
                amps[i + half] = a - b;
            }
        }
    }
    // One global 2^{-n/2}; butterfly sums above stay exact multiples of the
    // input amplitudes, which keeps balanced cancellations at exactly zero.
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Complex& a : amps) a *= scale;
}

double dj_run(const BitString& z) {
    const ReducedOracle oracle(z);
    DvState state = prepare_uniform(oracle.qubit_count());
    apply_reduced_oracle(state, oracle);
    walsh_hadamard(state);
    return std::norm(state.amplitude(0));
}

DenseMatrix build_full_oracle(int qubit_count, const BitString& z) {
    if (qubit_count < 1 || qubit_count > kMaxDenseOracleQubits)
        throw std::invalid_argument("qubit count must be between 1 and " +
                                    std::to_string(kMaxDenseOracleQubits) +
                                    " for the dense oracle");
    if (z.size() != (std::size_t{1} << qubit_count))
        throw std::invalid_argument("oracle setting length must be 2^qubit_count");
    DenseMatrix m((std::size_t{1} << (qubit_count + 1)));
    for (std::size_t x = 0; x < z.size(); ++x) {
        const std::size_t row0 = x << 1;
        if (z.bit(x) == 0) {
            m.at(row0, row0) = 1.0;
            m.at(row0 + 1, row0 + 1) = 1.0;
        } else {
            // f(x) = 1 swaps the target: an X block on |y>.
            m.at(row0, row0 + 1) = 1.0;
            m.at(row0 + 1, row0) = 1.0;
        }
    }
    return m;
}

}  // namespace cvdj
