#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aspectstat {

inline constexpr double kDefaultGrangerAlpha = 0.05;

struct GrangerResult {
    double f_stat = 0.0;
    double p_value = 1.0;
    std::size_t df_num = 0;  // lag order q
    std::size_t df_den = 0;  // n_eff - 2q - 1
    std::size_t n_eff = 0;   // regression rows after lag trimming
    int lag = 1;
    double alpha = kDefaultGrangerAlpha;
    bool causal = false;
    /// The unrestricted model left no residual. F is +inf and p 0 when the
    /// lagged cause was needed for that, and F 0 / p 1 when the response was
    /// already fit exactly without it.
    bool perfect_fit = false;
    double rss_restricted = 0.0;
    double rss_unrestricted = 0.0;
};

/// Tests whether lags 1..lag of `cause` help predict `effect`.
///
/// Restricted:   effect_t = c + sum_i d_i effect_{t-i}
/// Unrestricted: restricted + sum_i c_i cause_{t-i}
/// F = ((RSS_r - RSS_u) / q) / (RSS_u / (n_eff - 2q - 1)) against F(q, n_eff - 2q - 1).
///
/// The inputs are index-aligned (same time axis). NaN marks a missing value;
/// a row is used only when every value it needs is present. Throws
/// InsufficientData when fewer than 2*lag + 10 rows survive, RankDeficient
/// for collinear regressors.
GrangerResult granger_causes(std::span<const double> cause, std::span<const double> effect, int lag = 1,
                             double alpha = kDefaultGrangerAlpha);

/// v_t - v_{t-1}; the first element becomes NaN.
std::vector<double> first_difference(std::span<const double> v);

}  // namespace aspectstat
