#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "bitstring.hpp"

namespace cvdj {

using Complex = std::complex<double>;

// Statevector memory bound: 2^20 amplitudes.
inline constexpr int kMaxQubits = 20;
// The dense control+target oracle is 2^{n+1} x 2^{n+1}; cap it well below that.
inline constexpr int kMaxDenseOracleQubits = 10;

// n-qubit statevector over the computational basis in lexicographic order
// (basis index read as the bit pattern of the register).
class DvState {
public:
    explicit DvState(int qubit_count);  // |0...0>

    int qubit_count() const { return qubit_count_; }
    std::size_t dimension() const { return amps_.size(); }
    Complex amplitude(std::size_t i) const { return amps_[i]; }
    std::vector<Complex>& amplitudes() { return amps_; }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    double norm_squared() const;

private:
    int qubit_count_;
    std::vector<Complex> amps_;
};

// H^{(x)n} |0...0>: the uniform superposition.
DvState prepare_uniform(int qubit_count);

// Diagonal +-1 phase oracle built from an oracle setting of length 2^n.
class ReducedOracle {
public:
    explicit ReducedOracle(const BitString& z);

    int qubit_count() const { return qubit_count_; }
    const std::vector<double>& signs() const { return signs_; }

private:
    int qubit_count_;
    std::vector<double> signs_;
};

void apply_reduced_oracle(DvState& state, const ReducedOracle& oracle);

// In-place H^{(x)n} via the fast butterfly; normalization applied once at the end.
void walsh_hadamard(DvState& state);

// Full pipeline: probability of reading |0...0> after H, oracle, H.
double dj_run(const BitString& z);

// Row-major square matrix of doubles (the full oracle is a 0/1 permutation).
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> data;

    explicit DenseMatrix(std::size_t size) : n(size), data(size * size, 0.0) {}
    double& at(std::size_t r, std::size_t c) { return data[r * n + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * n + c]; }
};

// U_f on n control qubits plus one target: maps |x>|y> to |x>|y xor f(x)>.
// Basis index is (x << 1) | y.
DenseMatrix build_full_oracle(int qubit_count, const BitString& z);

}  // namespace cvdj
