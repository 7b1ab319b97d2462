// Test-side reference implementations, deliberately independent of src/:
// straightforward, slow, and written from the definitions.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace testref {

// Pascal's triangle; exact in uint64 for the sizes used here.
inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::vector<std::uint64_t> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(i + 1, 1);
        for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

// Composite 20-point Gauss-Legendre quadrature: exact for polynomials up to
// degree 39 per panel, so a handful of panels per oscillation suffices.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                             int panels) {
    static const double nodes[10] = {
        0.993128599185094924786, 0.963971927277913791268, 0.912234428251325905868,
        0.839116971822218823395, 0.746331906460150792614, 0.636053680726515025453,
        0.510867001950827098004, 0.373706088715419560673, 0.22778585114164507808,
        0.0765265211334973337546};
    static const double weights[10] = {
        0.0176140071391521183119, 0.040601429800386941331, 0.0626720483341090635695,
        0.0832767415767047487248, 0.101930119817240435037, 0.118194531961518417312,
        0.131688638449176626898, 0.142096109318382051329, 0.149172986472603746788,
        0.152753387130725850698};
    double total = 0.0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        const double half = 0.5 * h;
        double s = 0.0;
        for (int i = 0; i < 10; ++i)
            s += weights[i] * (f(mid - half * nodes[i]) + f(mid + half * nodes[i]));
        total += s * half;
    }
    return total;
}

// Dense tensor-power Hadamard applied by explicit matrix-vector product.
inline std::vector<std::complex<double>> hadamard_apply(
    const std::vector<std::complex<double>>& v) {
    const std::size_t dim = v.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<std::complex<double>> out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t c = 0; c < dim; ++c) {
            // H^(x)n entry: (-1)^{popcount(r & c)} / sqrt(dim)
            const int parity = __builtin_popcountll(r & c) & 1;
            acc += (parity ? -1.0 : 1.0) * v[c];
        }
        out[r] = scale * acc;
    }
    return out;
}

}  // namespace testref
