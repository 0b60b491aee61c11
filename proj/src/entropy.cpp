#include <aspectstat/entropy.hpp>
#include <aspectstat/knn.hpp>
#include <aspectstat/special_functions.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace aspectstat {

EntropyEstimate kl_entropy(std::span<const double> coords, std::size_t dim, int k) {
    if (k < 1) throw Error(ErrorCode::DomainError, "kl_entropy: k must be >= 1");
    if (dim == 0 || coords.size() % dim != 0) {
        throw Error(ErrorCode::DomainError, "kl_entropy: coordinate count is not a multiple of the dimension");
    }
    const std::size_t n = coords.size() / dim;
    const auto ku = static_cast<std::size_t>(k);
    if (n < ku + 2) {
        throw Error(ErrorCode::InsufficientData,
                    "kl_entropy: " + std::to_string(n) + " points, need at least k + 2 = " + std::to_string(ku + 2));
    }
    for (double v : coords) {
        if (!std::isfinite(v)) throw Error(ErrorCode::DomainError, "kl_entropy: non-finite sample");
    }

    const auto eps = kth_neighbor_distances(coords, dim, ku);
    EntropyEstimate est;
    est.k = k;
    est.n = n;
    est.dim = dim;
    double sum_log = 0.0, sum_sq = 0.0;
    for (double e : eps) {
        if (e == 0.0) {
            ++est.zero_distances;
            e = kZeroDistanceFloor;
        }
        const double l = std::log(e);
        sum_log += l;
        sum_sq += l * l;
    }
    if (2 * est.zero_distances > n) {
        throw Error(ErrorCode::DegenerateSample, "kl_entropy: " + std::to_string(est.zero_distances) + " of " +
                                                     std::to_string(n) + " neighbour distances are zero");
    }
    const double d = static_cast<double>(dim);
    est.value = digamma(static_cast<double>(n)) - digamma(static_cast<double>(k)) + d * std::numbers::ln2 +
                d * sum_log / static_cast<double>(n);
    const double nd = static_cast<double>(n);
    const double var_log = std::max(0.0, (sum_sq - sum_log * sum_log / nd) / (nd - 1.0));
    est.standard_error = d * std::sqrt(var_log / nd);
    return est;
}

EntropyEstimate conditional_entropy(std::span<const double> y, std::span<const double> x, int k) {
    if (x.size() != y.size()) throw Error(ErrorCode::InsufficientData, "conditional_entropy: lengths differ");
    std::vector<double> joint(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        joint[2 * i] = x[i];
        joint[2 * i + 1] = y[i];
    }
    const EntropyEstimate h_xy = kl_entropy(joint, 2, k);
    const EntropyEstimate h_x = kl_entropy(x, 1, k);
    EntropyEstimate out;
    out.value = h_xy.value - h_x.value;
    out.k = k;
    out.n = x.size();
    out.dim = 1;
    out.zero_distances = h_xy.zero_distances;
    return out;
}

UCoeffResult uncertainty_coefficient(std::span<const double> x, std::span<const double> y, int k,
                                     double min_denominator) {
    UCoeffResult res;
    res.k = k;
    res.n = y.size();
    const EntropyEstimate h_y = kl_entropy(y, 1, k);
    res.h_y = h_y.value;
    res.h_y_se = h_y.standard_error;
    res.h_y_given_x = conditional_entropy(y, x, k).value;
    res.mutual_information = res.h_y - res.h_y_given_x;
    res.valid = res.h_y >= std::max(min_denominator, kDenominatorNoiseMultiple * res.h_y_se);
    res.u = res.h_y != 0.0 ? res.mutual_information / res.h_y : std::nan("");
    return res;
}

UCoeffResult uncertainty_coefficient(const AlignedPairs& pairs, int k, double min_denominator) {
    return uncertainty_coefficient(pairs.x, pairs.y, k, min_denominator);
}

}  // namespace aspectstat
