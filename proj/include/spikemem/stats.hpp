#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>

namespace spikemem {

// Population (divide-by-N) mean and standard deviation.
struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;
};

inline MeanStd mean_std(std::span<const double> xs) {
    MeanStd r;
    if (xs.empty()) return r;
    double sum = 0.0;
    for (double x : xs) sum += x;
    r.mean = sum / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) {
        const double d = x - r.mean;
        ss += d * d;
    }
    r.stddev = std::sqrt(ss / static_cast<double>(xs.size()));
    return r;
}

// Pearson correlation, computed with Welford-style online co-moments.
// Returns nothing when either variance is zero (the coefficient is
// undefined, not 0).
inline std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = std::min(xs.size(), ys.size());
    if (n < 2) return std::nullopt;
    double mean_x = 0.0, mean_y = 0.0, m2x = 0.0, m2y = 0.0, cxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double k = 1.0 / static_cast<double>(i + 1);
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        mean_x += dx * k;
        mean_y += dy * k;
        m2x += dx * (xs[i] - mean_x);
        m2y += dy * (ys[i] - mean_y);
        cxy += dx * (ys[i] - mean_y);
    }
    if (m2x <= 0.0 || m2y <= 0.0) return std::nullopt;
    return cxy / std::sqrt(m2x * m2y);
}

} // namespace spikemem
