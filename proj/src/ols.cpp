#include <aspectstat/ols.hpp>
#include <aspectstat/error.hpp>

#include <string>

namespace aspectstat {

OlsFit ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& response) {
    const Eigen::Index rows = design.rows();
    const Eigen::Index cols = design.cols() + 1;
    if (response.size() != rows) throw Error(ErrorCode::InsufficientData, "ols: design and response row counts differ");
    if (rows < cols) {
        throw Error(ErrorCode::InsufficientData,
                    "ols: " + std::to_string(rows) + " rows for " + std::to_string(cols) + " coefficients");
    }
    if (!design.allFinite() || !response.allFinite()) throw Error(ErrorCode::NonFinite, "ols: non-finite input");

    Eigen::MatrixXd x(rows, cols);
    x.col(0).setOnes();
    x.rightCols(cols - 1) = design;

    Eigen::VectorXd norms = x.colwise().norm().transpose();
    if ((norms.array() == 0.0).any()) throw Error(ErrorCode::RankDeficient, "ols: all-zero regressor column");
    const Eigen::MatrixXd scaled = x * norms.cwiseInverse().asDiagonal();
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(scaled).singularValues();
    const double smin = sv(sv.size() - 1);
    if (!(smin > 0.0) || sv(0) / smin > kMaxConditionNumber) {
        throw Error(ErrorCode::RankDeficient, "ols: design condition number exceeds 1e10");
    }

    OlsFit fit;
    fit.coefficients = x.colPivHouseholderQr().solve(response);
    const Eigen::VectorXd resid = response - x * fit.coefficients;
    fit.rss = resid.squaredNorm();
    fit.n_obs = static_cast<std::size_t>(rows);
    return fit;
}

}  // namespace aspectstat
