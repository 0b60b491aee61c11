#pragma once

#include <Eigen/Dense>

#include <cstddef>

namespace aspectstat {

inline constexpr double kMaxConditionNumber = 1e10;

struct OlsFit {
    Eigen::VectorXd coefficients;  // intercept first
    double rss = 0.0;
    std::size_t n_obs = 0;
};

/// Least squares of `response` on an intercept plus the columns of `design`,
/// solved by column-pivoted Householder QR.
///
/// The rank check uses the 2-norm condition number of the intercept-augmented
/// design after scaling every column to unit length, so it does not depend on
/// the units of the regressors. Above kMaxConditionNumber the fit is refused
/// with RankDeficient. Fewer rows than coefficients gives InsufficientData.
OlsFit ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& response);

}  // namespace aspectstat
