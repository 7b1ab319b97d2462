#include "quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "errors.hpp"

namespace cvdj {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b,
                    double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h = b - a;
    const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
    const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0)
        throw ConvergenceError("adaptive quadrature failed to converge to the requested tolerance");
    return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 int max_depth) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
    return sign * simpson_step(f, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

double integrate_periodic_split(const std::function<double(double)>& f, double a, double b,
                                double period, double abs_tol) {
    if (!(period > 0.0)) throw std::invalid_argument("split period must be positive");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::vector<double> cuts{a};
    // Interior multiples of the period become panel boundaries.
    const double k_first = std::ceil(a / period);
    for (double k = k_first;; k += 1.0) {
        const double x = k * period;
        if (x >= b) break;
        if (x > cuts.back()) cuts.push_back(x);
    }
    cuts.push_back(b);
    const double total = b - a;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double len = cuts[i + 1] - cuts[i];
        sum += integrate(f, cuts[i], cuts[i + 1], abs_tol * (len / total));
    }
    return sign * sum;
}

}  // namespace cvdj
