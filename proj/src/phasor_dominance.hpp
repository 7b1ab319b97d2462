#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bitstring.hpp"

namespace cvdj {

using Complex = std::complex<double>;

// Balanced +-1 sign assignment over N phasor slots (N even).
class SignAssignment {
public:
    explicit SignAssignment(std::vector<std::int8_t> signs);
    static SignAssignment from_bitstring(const BitString& z);

    std::size_t size() const { return signs_.size(); }
    int sign(std::size_t slot) const { return signs_[slot]; }

private:
    std::vector<std::int8_t> signs_;
};

// Signed phasor sum at position x in the unit-half-extent convention (P = 1):
//   S_g(x) = sum_{j=1..N} g_j e^{i ((N - (2j-1))/N) x}.
// |S| is what the position density weighs, so P only rescales x.
Complex signed_sum(const SignAssignment& g, double x);

struct DominanceWitness {
    BitString setting;
    double position;
    double excess;  // |S_g| - |S_block| at the witness point
};

struct DominanceReport {
    bool holds;
    // Minimum of |S_block(x)| - |S_g(x)| over every balanced g outside the
    // block pair and every grid point x > 0; zero when N = 2 leaves no
    // competitor.
    double worst_margin;
    std::optional<DominanceWitness> witness;
    std::size_t strings_checked;
    std::size_t grid_points;
};

// Brute-force check that the block pair's |S| dominates every balanced
// competitor's on a uniform grid over [0, pi/2].  C(N, N/2) strings; refuse
// beyond the cap.
inline constexpr std::size_t kDominanceCap = 16;

DominanceReport verify_asb_dominance(std::size_t n, std::size_t grid_points,
                                     double tolerance = 1e-9);

}  // namespace cvdj
