#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "bitstring.hpp"
#include "momentum_encoding.hpp"

namespace cvdj {

using Complex = std::complex<double>;

// Angles of the N unit phasors at position x, in slot order j = 1..N:
//   phi_j(x) = ((N - (2j - 1)) / N) * P * x
// Slot j collects the bin of z_{j-1} (ascending momentum order).
std::vector<double> phasor_angles(std::size_t n, double half_extent, double x);

// Closed-form position wavefunction of an encoded setting:
//   phi_z(x) = sin(Px/N) / (sqrt(P pi) x) * sum_j (-1)^{z_{j-1}} e^{i phi_j(x)}.
// The x -> 0 limit is taken by series below a small switch point.
class PositionWavefunction {
public:
    PositionWavefunction(BitString z, CvParams params);

    Complex operator()(double x) const;
    const BitString& setting() const { return z_; }
    const CvParams& params() const { return params_; }

private:
    BitString z_;
    CvParams params_;
    std::vector<double> signs_;
    double eps_switch_;
};

// Probability density with the natural quadrature panel length attached
// (the density oscillates on the scale pi/P).
struct Pdf {
    std::function<double(double)> value;
    double oscillation_period;

    double operator()(double x) const { return value(x); }
};

// |phi_z|^2.  Complement settings produce bitwise-identical densities: the
// sign pattern is canonicalized (global sign fixed) before evaluation.
Pdf pdf(const PositionWavefunction& wf);

// P_const(x) = sin^2(Px) / (P pi x^2): any constant setting, any N.
Pdf closed_form_constant_pdf(double half_extent);

// P_asb(x) = (cos(Px) - 1)^2 / (P pi x^2): the block pair, any even N.
Pdf closed_form_asb_pdf(double half_extent);

struct CrosscheckResult {
    double max_deviation;
    bool resolution_warning;  // fewer than 64 samples per bin
};

// Inverse Fourier transform (kernel e^{-ipx}/sqrt(2 pi)) of the midpoint-
// sampled momentum signal, evaluated by direct Riemann summation and compared
// against the analytic phasor form on [-X, X].
CrosscheckResult fft_crosscheck(const BitString& z, const CvParams& params,
                                std::size_t sample_count, double position_window,
                                std::size_t comparison_points = 257);

}  // namespace cvdj
