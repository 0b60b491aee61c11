#include <aspectstat/special_functions.hpp>
#include <aspectstat/error.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace aspectstat {

double digamma(double z) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw Error(ErrorCode::DomainError, "digamma is defined here for finite z > 0, got " + std::to_string(z));
    }
    double acc = 0.0;
    while (z < 6.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    // Bernoulli terms B_2k / (2k z^2k), k = 1..7
    const double series =
        inv2 * (1.0 / 12 -
                inv2 * (1.0 / 120 -
                        inv2 * (1.0 / 252 -
                                inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12))))));
    return acc + std::log(z) - 0.5 * inv - series;
}

double log_gamma(double z) {
    if (!(z > 0.0)) throw Error(ErrorCode::DomainError, "log_gamma requires z > 0");
    static constexpr std::array<double, 9> kCoef{
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z < 0.5) {
        // Reflection keeps the Lanczos sum in its accurate range.
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    double x = kCoef[0];
    for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

namespace {

double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIter = 10000;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    throw Error(ErrorCode::NonFinite, "incomplete beta continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::DomainError, "incomplete beta requires a, b > 0 and x in [0, 1]");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_front =
        log_gamma(a + b) - log_gamma(a) - log_gamma(b) + a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double f_distribution_sf(double f, double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0)) throw Error(ErrorCode::DomainError, "F distribution needs positive dof");
    if (std::isnan(f) || f < 0.0) throw Error(ErrorCode::DomainError, "F statistic must be >= 0");
    if (f == 0.0) return 1.0;
    if (std::isinf(f)) return 0.0;
    const double x = d2 / (d2 + d1 * f);
    return regularized_incomplete_beta(0.5 * d2, 0.5 * d1, x);
}

}  // namespace aspectstat
