#pragma once

#include "wavefunction.hpp"

namespace cvdj {

// Symmetric detection window [-delta, delta] around the origin.
struct Window {
    double half_width;  // delta > 0

    explicit Window(double delta);
};

// Integral of a density over the window by adaptive quadrature, split on the
// density's oscillation period.  Values outside [0, 1] by more than 1e-9 are
// an error; smaller excursions are clamped.
double window_probability(const Pdf& density, const Window& w, double abs_tol = 1e-10);

// Closed forms via the sine integral:
//   Pr_const(delta) = (cos(2 delta P) + 2 delta P Si(2 delta P) - 1) / (delta P pi)
//   Pr_asb(delta)   = (-8 sin^4(delta P / 2) + 4 delta P Si(delta P)
//                      - 2 delta P Si(2 delta P)) / (delta P pi)
double constant_window_prob(double half_extent, double delta);
double asb_window_prob(double half_extent, double delta);

// The half-width maximizing Pr_const - Pr_asb; the unique interior stationary
// point solves sin^2(P delta) = (cos(P delta) - 1)^2, i.e. P delta = pi/2.
double optimal_delta(double half_extent);

}  // namespace cvdj
