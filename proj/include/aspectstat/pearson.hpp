#pragma once

#include <aspectstat/core.hpp>

#include <cstddef>
#include <span>

namespace aspectstat {

inline constexpr double kDefaultPearsonThreshold = 0.4;

struct CorrelationResult {
    double r = 0.0;
    std::size_t n = 0;
    bool significant = false;
    double threshold = kDefaultPearsonThreshold;
};

/// Sample Pearson correlation, two-pass (means first). Requires n >= 3.
/// Throws InsufficientData for n < 3 or mismatched lengths, DegenerateSeries
/// if either coordinate has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);
double pearson(const AlignedPairs& pairs);

/// |r| > threshold, strictly.
bool classify(double r, double threshold = kDefaultPearsonThreshold);

CorrelationResult correlate(const AlignedPairs& pairs, double threshold = kDefaultPearsonThreshold);

}  // namespace aspectstat
