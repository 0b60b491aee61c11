#include <aspectstat/pearson.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace aspectstat {

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw Error(ErrorCode::InsufficientData, "pearson: series lengths differ");
    const std::size_t n = x.size();
    if (n < 3) throw Error(ErrorCode::InsufficientData, "pearson: need at least 3 pairs, got " + std::to_string(n));

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw Error(ErrorCode::DegenerateSeries, "pearson: a series is constant");
    if (!std::isfinite(sxx) || !std::isfinite(syy) || !std::isfinite(sxy)) {
        throw Error(ErrorCode::NonFinite, "pearson: non-finite sums");
    }
    return std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
}

double pearson(const AlignedPairs& pairs) { return pearson(pairs.x, pairs.y); }

bool classify(double r, double threshold) { return std::abs(r) > threshold; }

CorrelationResult correlate(const AlignedPairs& pairs, double threshold) {
    CorrelationResult res;
    res.r = pearson(pairs);
    res.n = pairs.n();
    res.threshold = threshold;
    res.significant = classify(res.r, threshold);
    return res;
}

}  // namespace aspectstat
