#pragma once

#include <aspectstat/core.hpp>

#include <cstddef>
#include <span>

namespace aspectstat {

inline constexpr int kDefaultEntropyK = 3;
inline constexpr double kMinEntropyDenominator = 1e-6;
/// k-NN distances of exactly zero (duplicate points) are raised to this
/// before taking logs.
inline constexpr double kZeroDistanceFloor = 1e-12;
/// H(y) must also clear this many of its own standard errors before u is
/// reported as valid; a fixed 1e-6 floor is far inside the estimator's noise.
inline constexpr double kDenominatorNoiseMultiple = 3.0;

/// Differential entropy estimate in nats.
struct EntropyEstimate {
    double value = 0.0;
    int k = kDefaultEntropyK;
    std::size_t n = 0;
    std::size_t dim = 1;
    std::size_t zero_distances = 0;
    /// d * sd(log eps_i) / sqrt(n): sampling noise of the distance term.
    double standard_error = 0.0;
};

/// Kozachenko-Leonenko estimator under the max-norm:
///   H = psi(n) - psi(k) + d log 2 + (d / n) sum_i log eps_i
/// with eps_i the distance from point i to its k-th nearest neighbour.
/// `coords` is row-major with `dim` values per point.
///
/// Throws InsufficientData when n < k + 2, DomainError for non-finite
/// points or k < 1, DegenerateSample when more than half of the eps_i are 0.
EntropyEstimate kl_entropy(std::span<const double> coords, std::size_t dim, int k = kDefaultEntropyK);
inline EntropyEstimate kl_entropy(std::span<const double> samples, int k = kDefaultEntropyK) {
    return kl_entropy(samples, 1, k);
}

/// H(y | x) = H(x, y) - H(x), both terms from kl_entropy.
EntropyEstimate conditional_entropy(std::span<const double> y, std::span<const double> x, int k = kDefaultEntropyK);

struct UCoeffResult {
    double u = 0.0;
    double h_y = 0.0;
    double h_y_se = 0.0;
    double h_y_given_x = 0.0;
    /// h_y - h_y_given_x, the mutual-information estimate in nats.
    double mutual_information = 0.0;
    /// False when h_y is not safely positive; u is then unreliable and NaN
    /// if h_y is exactly 0.
    bool valid = false;
    int k = kDefaultEntropyK;
    std::size_t n = 0;
};

/// Fraction of the entropy of the price series removed by knowing the
/// (already lagged) sentiment: u = (H(y) - H(y|x)) / H(y). Valid only when
/// H(y) >= max(`min_denominator`, kDenominatorNoiseMultiple * se(H(y))).
UCoeffResult uncertainty_coefficient(const AlignedPairs& pairs, int k = kDefaultEntropyK,
                                     double min_denominator = kMinEntropyDenominator);
UCoeffResult uncertainty_coefficient(std::span<const double> x, std::span<const double> y,
                                     int k = kDefaultEntropyK, double min_denominator = kMinEntropyDenominator);

}  // namespace aspectstat
