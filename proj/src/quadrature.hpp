#pragma once

#include <functional>

namespace cvdj {

// Adaptive Simpson integration of f over [a, b] with an absolute error
// target.  Throws ConvergenceError if the recursion bottoms out before the
// local tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth = 48);

// Same, but first splits [a, b] at every integer multiple of `period` inside
// the interval so each oscillation lobe is integrated on its own panel.
double integrate_periodic_split(const std::function<double(double)>& f, double a, double b,
                                double period, double abs_tol);

}  // namespace cvdj
