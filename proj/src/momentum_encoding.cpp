#include "momentum_encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace cvdj {

CvParams::CvParams(std::size_t n, double p) : bit_count(n), half_extent(p) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("bit count N must be even and at least 2");
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("half-extent P must be positive and finite");
}

double tophat(double p, double half_width, double center) {
    if (!(half_width > 0.0)) throw std::invalid_argument("top-hat half-width must be positive");
    if (p < center - half_width || p > center + half_width) return 0.0;
    return 1.0 / std::sqrt(2.0 * half_width);
}

double bin_sign(const BitString& z, const CvParams& params, double p) {
    if (z.size() != params.bit_count)
        throw std::invalid_argument("bit string length must equal the bin count N");
    const double P = params.half_extent;
    if (p < -P || p > P) return 0.0;
    // Ascending bins: bin i covers [-P + i*w, -P + (i+1)*w).  The final edge
    // p = +P belongs to the last bin (clamp), so the closed interval is covered.
    double idx = std::floor((p + P) / params.bin_width());
    if (idx < 0.0) idx = 0.0;
    std::size_t i = static_cast<std::size_t>(idx);
    if (i >= params.bit_count) i = params.bit_count - 1;
    return z.sign(i);
}

MomentumSignal::MomentumSignal(BitString z, CvParams params)
    : z_(std::move(z)), params_(params), amplitude_(1.0 / std::sqrt(2.0 * params.half_extent)) {
    if (z_.size() != params_.bit_count)
        throw std::invalid_argument("bit string length must equal the bin count N");
}

double MomentumSignal::operator()(double p) const {
    const double P = params_.half_extent;
    if (p < -P || p > P) return 0.0;
    return amplitude_ * bin_sign(z_, params_, p);
}

GridSamples grid_sample(const MomentumSignal& signal, std::size_t sample_count) {
    const std::size_t n = signal.params().bit_count;
    if (sample_count == 0 || (sample_count & (sample_count - 1)) != 0)
        throw std::invalid_argument("sample count must be a power of two");
    if (sample_count < 4 * n)
        throw std::invalid_argument("sample count must be at least 4N");
    if (sample_count % n != 0)
        throw std::invalid_argument(
            "sample count must be divisible by N so bin edges fall on cell boundaries");
    const double P = signal.params().half_extent;
    const double w = 2.0 * P / static_cast<double>(sample_count);
    GridSamples out;
    out.cell_width = w;
    out.points.resize(sample_count);
    out.values.resize(sample_count);
    for (std::size_t k = 0; k < sample_count; ++k) {
        const double p = -P + (static_cast<double>(k) + 0.5) * w;
        out.points[k] = p;
        out.values[k] = signal(p);
    }
    return out;
}

}  // namespace cvdj
