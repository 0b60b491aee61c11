#include <aspectstat/granger.hpp>
#include <aspectstat/error.hpp>
#include <aspectstat/ols.hpp>
#include <aspectstat/special_functions.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace aspectstat {

namespace {

// Residual sums below this fraction of the response's total sum of squares
// are treated as an exact fit.
constexpr double kPerfectFitRelTol = 1e-24;

}  // namespace

GrangerResult granger_causes(std::span<const double> cause, std::span<const double> effect, int lag, double alpha) {
    if (lag < 1) throw Error(ErrorCode::DomainError, "granger: lag must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::DomainError, "granger: alpha must be in (0, 1)");
    if (cause.size() != effect.size()) throw Error(ErrorCode::InsufficientData, "granger: series lengths differ");

    const auto q = static_cast<std::size_t>(lag);
    std::vector<std::size_t> rows;
    for (std::size_t t = q; t < effect.size(); ++t) {
        bool ok = std::isfinite(effect[t]);
        for (std::size_t i = 1; ok && i <= q; ++i) ok = std::isfinite(effect[t - i]) && std::isfinite(cause[t - i]);
        if (ok) rows.push_back(t);
    }
    const std::size_t n = rows.size();
    if (n < 2 * q + 10) {
        throw Error(ErrorCode::InsufficientData,
                    "granger: " + std::to_string(n) + " usable rows, need " + std::to_string(2 * q + 10));
    }

    GrangerResult res;
    res.lag = lag;
    res.alpha = alpha;
    res.n_eff = n;
    res.df_num = q;
    res.df_den = n - 2 * q - 1;

    Eigen::VectorXd response(static_cast<Eigen::Index>(n));
    Eigen::MatrixXd restricted(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(q));
    Eigen::MatrixXd unrestricted(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(2 * q));
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t t = rows[r];
        const auto row = static_cast<Eigen::Index>(r);
        response(row) = effect[t];
        for (std::size_t i = 1; i <= q; ++i) {
            const auto col = static_cast<Eigen::Index>(i - 1);
            restricted(row, col) = effect[t - i];
            unrestricted(row, col) = effect[t - i];
            unrestricted(row, col + static_cast<Eigen::Index>(q)) = cause[t - i];
        }
    }

    const double tss = (response.array() - response.mean()).square().sum();
    if (tss == 0.0) {
        // A constant response is fit exactly by the intercept alone.
        res.perfect_fit = true;
        return res;
    }

    const OlsFit fit_r = ols(restricted, response);
    const OlsFit fit_u = ols(unrestricted, response);
    res.rss_restricted = fit_r.rss;
    res.rss_unrestricted = fit_u.rss;

    if (fit_u.rss <= kPerfectFitRelTol * tss) {
        res.perfect_fit = true;
        if (fit_r.rss <= kPerfectFitRelTol * tss) return res;
        res.f_stat = std::numeric_limits<double>::infinity();
        res.p_value = 0.0;
        res.causal = true;
        return res;
    }

    const double num = std::max(0.0, fit_r.rss - fit_u.rss) / static_cast<double>(q);
    const double den = fit_u.rss / static_cast<double>(res.df_den);
    res.f_stat = num / den;
    res.p_value = f_distribution_sf(res.f_stat, static_cast<double>(res.df_num), static_cast<double>(res.df_den));
    res.causal = res.p_value < alpha;
    return res;
}

std::vector<double> first_difference(std::span<const double> v) {
    std::vector<double> out(v.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 1; i < v.size(); ++i) out[i] = v[i] - v[i - 1];
    return out;
}

}  // namespace aspectstat
