#include "phasor_dominance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"

namespace cvdj {

SignAssignment::SignAssignment(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    if (signs_.empty() || signs_.size() % 2 != 0)
        throw std::invalid_argument("sign assignment length must be even and positive");
    std::ptrdiff_t total = 0;
    for (std::int8_t s : signs_) {
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
        total += s;
    }
    if (total != 0) throw std::invalid_argument("sign assignment must be balanced");
}

SignAssignment SignAssignment::from_bitstring(const BitString& z) {
    std::vector<std::int8_t> signs(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) signs[i] = z.bit(i) ? -1 : 1;
    return SignAssignment(std::move(signs));
}

Complex signed_sum(const SignAssignment& g, double x) {
    const double nd = static_cast<double>(g.size());
    double re = 0.0, im = 0.0;
    for (std::size_t j = 1; j <= g.size(); ++j) {
        const double angle = ((nd - (2.0 * static_cast<double>(j) - 1.0)) / nd) * x;
        const double s = static_cast<double>(g.sign(j - 1));
        re += s * std::cos(angle);
        im += s * std::sin(angle);
    }
    return Complex{re, im};
}

DominanceReport verify_asb_dominance(std::size_t n, std::size_t grid_points, double tolerance) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("bit count N must be even and at least 2");
    if (n > kDominanceCap)
        throw LimitError("dominance check refused: N exceeds the brute-force cap of " +
                         std::to_string(kDominanceCap));
    if (grid_points < 2) throw std::invalid_argument("grid needs at least 2 points");
    if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");

    const double nd = static_cast<double>(n);
    // Phasor table: unit phasors per (grid point, slot); every |S_g| is then a
    // signed sum over one row.
    std::vector<double> xs(grid_points);
    std::vector<double> cos_tab(grid_points * n), sin_tab(grid_points * n);
    for (std::size_t ix = 0; ix < grid_points; ++ix) {
        const double x = (std::numbers::pi / 2.0) * static_cast<double>(ix) /
                         static_cast<double>(grid_points - 1);
        xs[ix] = x;
        for (std::size_t j = 1; j <= n; ++j) {
            const double angle = ((nd - (2.0 * static_cast<double>(j) - 1.0)) / nd) * x;
            cos_tab[ix * n + (j - 1)] = std::cos(angle);
            sin_tab[ix * n + (j - 1)] = std::sin(angle);
        }
    }

    const auto [block_low, block_high] = asb_pair(n);
    std::vector<double> block_abs(grid_points);
    const SignAssignment block = SignAssignment::from_bitstring(block_low);
    for (std::size_t ix = 0; ix < grid_points; ++ix) {
        double re = 0.0, im = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double s = static_cast<double>(block.sign(k));
            re += s * cos_tab[ix * n + k];
            im += s * sin_tab[ix * n + k];
        }
        block_abs[ix] = std::hypot(re, im);
    }

    DominanceReport report{};
    report.holds = true;
    report.worst_margin = std::numeric_limits<double>::infinity();
    report.grid_points = grid_points;

    bool any_competitor = false;
    BalancedEnumerator it(n, kDominanceCap);
    while (auto z = it.next()) {
        ++report.strings_checked;
        if (*z == block_low || *z == block_high) continue;
        any_competitor = true;
        std::vector<double> s(n);
        for (std::size_t k = 0; k < n; ++k) s[k] = z->sign(k);
        // x = 0 is excluded from the margin: every balanced sum vanishes there.
        for (std::size_t ix = 1; ix < grid_points; ++ix) {
            double re = 0.0, im = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                re += s[k] * cos_tab[ix * n + k];
                im += s[k] * sin_tab[ix * n + k];
            }
            const double margin = block_abs[ix] - std::hypot(re, im);
            if (margin < report.worst_margin) report.worst_margin = margin;
            if (margin < -tolerance && report.holds) {
                report.holds = false;
                report.witness = DominanceWitness{*z, xs[ix], -margin};
            }
        }
    }
    if (!any_competitor) report.worst_margin = 0.0;  // N = 2: the pair is everything
    return report;
}

}  // namespace cvdj
