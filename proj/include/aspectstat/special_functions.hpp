#pragma once

namespace aspectstat {

/// ψ(z) for z > 0: upward recurrence to z >= 6, then the asymptotic series.
/// Absolute error below 1e-12. Throws DomainError for z <= 0 or NaN.
double digamma(double z);

/// ln Γ(z) for z > 0 (Lanczos, g = 7).
double log_gamma(double z);

/// Regularized incomplete beta I_x(a, b) by continued fraction (modified
/// Lentz). Requires a, b > 0 and 0 <= x <= 1.
double regularized_incomplete_beta(double a, double b, double x);

/// Upper tail P(F > f) of the F(d1, d2) distribution,
/// I_{d2/(d2 + d1 f)}(d2/2, d1/2). f = +inf gives 0.
double f_distribution_sf(double f, double d1, double d2);

}  // namespace aspectstat
