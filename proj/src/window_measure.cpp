#include "window_measure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"
#include "quadrature.hpp"
#include "sine_integral.hpp"

namespace cvdj {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kClampSlack = 1e-9;

void check_window_params(double half_extent, double delta) {
    if (!(half_extent > 0.0)) throw std::invalid_argument("half-extent P must be positive");
    if (!(delta > 0.0)) throw std::invalid_argument("window half-width delta must be positive");
}

double clamp_probability(double p, const char* what) {
    if (!(p > -kClampSlack) || !(p < 1.0 + kClampSlack))
        throw ConvergenceError(std::string(what) + " produced a value outside [0,1] beyond tolerance");
    if (p < 0.0) return 0.0;
    if (p > 1.0) return 1.0;
    return p;
}
}  // namespace

Window::Window(double delta) : half_width(delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw std::invalid_argument("window half-width delta must be positive and finite");
}

double window_probability(const Pdf& density, const Window& w, double abs_tol) {
    const double p = integrate_periodic_split(density.value, -w.half_width, w.half_width,
                                              density.oscillation_period, abs_tol);
    return clamp_probability(p, "window quadrature");
}

double constant_window_prob(double half_extent, double delta) {
    check_window_params(half_extent, delta);
    const double a = delta * half_extent;
    const double p = (std::cos(2.0 * a) + 2.0 * a * sine_integral(2.0 * a) - 1.0) / (a * kPi);
    return clamp_probability(p, "closed-form window probability");
}

double asb_window_prob(double half_extent, double delta) {
    check_window_params(half_extent, delta);
    const double a = delta * half_extent;
    const double s = std::sin(0.5 * a);
    const double s2 = s * s;
    const double p =
        (-8.0 * s2 * s2 + 4.0 * a * sine_integral(a) - 2.0 * a * sine_integral(2.0 * a)) /
        (a * kPi);
    return clamp_probability(p, "closed-form window probability");
}

double optimal_delta(double half_extent) {
    if (!(half_extent > 0.0)) throw std::invalid_argument("half-extent P must be positive");
    const double P = half_extent;
    // d/d(delta) of the separation; zero where sin^2(a) = (cos(a)-1)^2, a = P delta.
    const auto deriv = [P](double delta) {
        const double a = P * delta;
        const double s = std::sin(a);
        const double c = std::cos(a) - 1.0;
        return (s * s - c * c) / (P * kPi * delta * delta);
    };
    // Bracket the first sign change on (0, 2 pi / P]; the derivative starts
    // positive for small windows.
    const double upper = 2.0 * kPi / P;
    const int scan_steps = 1024;
    double lo = upper / static_cast<double>(scan_steps * 4);
    double f_lo = deriv(lo);
    double hi = 0.0;
    for (int k = 1; k <= scan_steps; ++k) {
        const double x = upper * static_cast<double>(k) / static_cast<double>(scan_steps);
        const double fx = deriv(x);
        if ((f_lo > 0.0) != (fx > 0.0)) {
            hi = x;
            break;
        }
        lo = x;
        f_lo = fx;
    }
    if (hi == 0.0)
        throw ConvergenceError("no sign change found for the window-separation derivative");
    // Bisection to ~1e-15 relative.
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = deriv(mid);
        if ((f_lo > 0.0) == (fm > 0.0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace cvdj
