#pragma once

#include <cstddef>
#include <vector>

#include "bitstring.hpp"

namespace cvdj {

// Substrate geometry: N equal momentum bins of width 2P/N spanning [-P, P],
// numbered in ascending momentum order (bin 0 starts at -P).
struct CvParams {
    std::size_t bit_count;  // N
    double half_extent;     // P

    CvParams(std::size_t n, double p);
    double bin_width() const { return 2.0 * half_extent / static_cast<double>(bit_count); }
};

// Normalized top-hat: (2w)^{-1/2} on [c - w, c + w], zero outside.
double tophat(double p, double half_width, double center = 0.0);

// Sign carried by the bin containing p: (-1)^{z_i} inside [-P, P], 0 outside.
// Bins are half-open [lo, hi) except the last, which closes at +P.
double bin_sign(const BitString& z, const CvParams& params, double p);

// Encoded momentum-space wavefunction: the substrate top-hat with the sign
// pattern of z imprinted bin by bin.
class MomentumSignal {
public:
    MomentumSignal(BitString z, CvParams params);

    double operator()(double p) const;
    const CvParams& params() const { return params_; }
    const BitString& setting() const { return z_; }

private:
    BitString z_;
    CvParams params_;
    double amplitude_;  // (2P)^{-1/2}
};

// Midpoint samples of a signal on a uniform grid over [-P, P].
struct GridSamples {
    std::vector<double> points;
    std::vector<double> values;
    double cell_width;
};

// sample_count must be a power of two, at least 4N, and divisible by N so
// that no sample lands on a bin edge.
GridSamples grid_sample(const MomentumSignal& signal, std::size_t sample_count);

}  // namespace cvdj
