#include "wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cvdj {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(u)/u guarded at u = 0 by a 3-term even series.
double sinc(double u) {
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

// (cos(u) - 1)/u with the cancellation near u = 0 replaced by its series.
double cosm1_over(double u) {
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return -0.5 * u * (1.0 - u2 / 12.0 + u2 * u2 / 360.0);
    }
    return (std::cos(u) - 1.0) / u;
}

}  // namespace

std::vector<double> phasor_angles(std::size_t n, double half_extent, double x) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("bit count N must be even and at least 2");
    if (!(half_extent > 0.0)) throw std::invalid_argument("half-extent P must be positive");
    std::vector<double> angles(n);
    const double nd = static_cast<double>(n);
    for (std::size_t j = 1; j <= n; ++j) {
        angles[j - 1] = ((nd - (2.0 * static_cast<double>(j) - 1.0)) / nd) * half_extent * x;
    }
    return angles;
}

PositionWavefunction::PositionWavefunction(BitString z, CvParams params)
    : z_(std::move(z)), params_(params) {
    if (z_.size() != params_.bit_count)
        throw std::invalid_argument("bit string length must equal the bin count N");
    signs_.resize(z_.size());
    for (std::size_t i = 0; i < z_.size(); ++i) signs_[i] = z_.sign(i);
    // Below this |x| the sin(Px/N)/x prefactor switches to its series;
    // scaled so the switch point tracks the argument, not raw x.
    eps_switch_ = 1e-6 * static_cast<double>(params_.bit_count) / params_.half_extent;
}

Complex PositionWavefunction::operator()(double x) const {
    const double P = params_.half_extent;
    const double nd = static_cast<double>(params_.bit_count);
    const double u = P * x / nd;
    double prefactor;
    if (std::abs(x) < eps_switch_) {
        const double u2 = u * u;
        prefactor = (P / nd) * (1.0 - u2 / 6.0 + u2 * u2 / 120.0) / std::sqrt(P * kPi);
    } else {
        prefactor = std::sin(u) / (std::sqrt(P * kPi) * x);
    }
    // Phasor angles step down by 2Px/N per slot; advance incrementally.
    const double step = -2.0 * u;
    double angle = (nd - 1.0) * u;
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < signs_.size(); ++j, angle += step) {
        sum += signs_[j] * Complex{std::cos(angle), std::sin(angle)};
    }
    return prefactor * sum;
}

Pdf pdf(const PositionWavefunction& wf) {
    // Canonical global sign: first slot positive.  Complements then share the
    // same arithmetic, making their densities identical to the last bit.
    std::vector<double> signs(wf.setting().size());
    const double flip = wf.setting().sign(0);
    for (std::size_t i = 0; i < signs.size(); ++i) signs[i] = flip * wf.setting().sign(i);
    const CvParams params = wf.params();
    const double P = params.half_extent;
    const double nd = static_cast<double>(params.bit_count);
    const double eps = 1e-6 * nd / P;
    auto value = [signs, P, nd, eps](double x) {
        const double u = P * x / nd;
        double pref;
        if (std::abs(x) < eps) {
            const double u2 = u * u;
            pref = (P / nd) * (1.0 - u2 / 6.0 + u2 * u2 / 120.0) / std::sqrt(P * kPi);
        } else {
            pref = std::sin(u) / (std::sqrt(P * kPi) * x);
        }
        const double step = -2.0 * u;
        double angle = (nd - 1.0) * u;
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < signs.size(); ++j, angle += step) {
            re += signs[j] * std::cos(angle);
            im += signs[j] * std::sin(angle);
        }
        return pref * pref * (re * re + im * im);
    };
    return Pdf{std::move(value), kPi / P};
}

Pdf closed_form_constant_pdf(double half_extent) {
    if (!(half_extent > 0.0)) throw std::invalid_argument("half-extent P must be positive");
    const double P = half_extent;
    return Pdf{[P](double x) {
                   const double s = sinc(P * x);
                   return (P / kPi) * s * s;
               },
               kPi / P};
}

Pdf closed_form_asb_pdf(double half_extent) {
    if (!(half_extent > 0.0)) throw std::invalid_argument("half-extent P must be positive");
    const double P = half_extent;
    return Pdf{[P](double x) {
                   const double h = cosm1_over(P * x);
                   return (P / kPi) * h * h;
               },
               kPi / P};
}

CrosscheckResult fft_crosscheck(const BitString& z, const CvParams& params,
                                std::size_t sample_count, double position_window,
                                std::size_t comparison_points) {
    if (!(position_window > 0.0))
        throw std::invalid_argument("position window must be positive");
    if (comparison_points < 2)
        throw std::invalid_argument("comparison needs at least 2 points");
    const MomentumSignal signal(z, params);
    const GridSamples samples = grid_sample(signal, sample_count);
    const PositionWavefunction wf(z, params);

    CrosscheckResult result{};
    result.resolution_warning = sample_count < 64 * params.bit_count;

    const double norm = samples.cell_width / std::sqrt(2.0 * kPi);
    double worst = 0.0;
    for (std::size_t ix = 0; ix < comparison_points; ++ix) {
        const double x = -position_window +
                         2.0 * position_window * static_cast<double>(ix) /
                             static_cast<double>(comparison_points - 1);
        // Riemann sum of the inverse transform: sum_k f(p_k) e^{-i p_k x} dp.
        // The phase advances by a constant factor per sample; resync the
        // rotation from exact trig every so often to stop drift.
        const Complex step{std::cos(-samples.cell_width * x), std::sin(-samples.cell_width * x)};
        Complex rot{1.0, 0.0};
        Complex acc{0.0, 0.0};
        std::size_t base = 0;
        Complex base_phase{std::cos(-samples.points[0] * x), std::sin(-samples.points[0] * x)};
        for (std::size_t k = 0; k < samples.values.size(); ++k) {
            if (k - base == 512) {
                base = k;
                base_phase = Complex{std::cos(-samples.points[k] * x),
                                     std::sin(-samples.points[k] * x)};
                rot = Complex{1.0, 0.0};
            }
            acc += samples.values[k] * (base_phase * rot);
            rot *= step;
        }
        const Complex numeric = norm * acc;
        const double dev = std::abs(numeric - wf(x));
        if (dev > worst) worst = dev;
    }
    result.max_deviation = worst;
    return result;
}

}  // namespace cvdj
