#pragma once

// Reference computations used as test oracles. None of these share code with
// the library: long double arithmetic, brute force, or plain quadrature.

#include <aspectstat/random.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace testsupport {

// Textbook two-pass Pearson in long double.
inline long double pearson_ld(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    long double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    long double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

// Exact integer Pearson: r = (nΣxy - ΣxΣy) / sqrt((nΣx² - (Σx)²)(nΣy² - (Σy)²)).
// Every sum is an exact 64-bit integer; only the final root is rounded.
inline long double pearson_exact_int(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    const auto n = static_cast<std::int64_t>(x.size());
    std::int64_t sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    const __int128 num = static_cast<__int128>(n) * sxy - static_cast<__int128>(sx) * sy;
    const __int128 vx = static_cast<__int128>(n) * sxx - static_cast<__int128>(sx) * sx;
    const __int128 vy = static_cast<__int128>(n) * syy - static_cast<__int128>(sy) * sy;
    const long double r2 = static_cast<long double>(num * num) / static_cast<long double>(vx * vy);
    return (num < 0 ? -1.0L : 1.0L) * std::sqrt(r2);
}

// Least squares through the normal equations (XᵀX)b = Xᵀy in long double,
// Gauss-Jordan with partial pivoting. `rows` are regressors without the
// intercept; one is added. Returns coefficients then rss in the last slot.
inline std::vector<long double> ols_normal_equations(const std::vector<std::vector<double>>& rows,
                                                     const std::vector<double>& y) {
    const std::size_t p = rows.empty() ? 1 : rows[0].size() + 1;
    std::vector<std::vector<long double>> a(p, std::vector<long double>(p + 1, 0.0L));
    for (std::size_t i = 0; i < y.size(); ++i) {
        std::vector<long double> xi(p);
        xi[0] = 1.0L;
        for (std::size_t j = 1; j < p; ++j) xi[j] = rows[i][j - 1];
        for (std::size_t r = 0; r < p; ++r) {
            for (std::size_t c = 0; c < p; ++c) a[r][c] += xi[r] * xi[c];
            a[r][p] += xi[r] * y[i];
        }
    }
    for (std::size_t c = 0; c < p; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < p; ++r) {
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        }
        std::swap(a[c], a[piv]);
        for (std::size_t r = 0; r < p; ++r) {
            if (r == c) continue;
            const long double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= p; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<long double> b(p);
    for (std::size_t j = 0; j < p; ++j) b[j] = a[j][p] / a[j][j];
    long double rss = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        long double fit = b[0];
        for (std::size_t j = 1; j < p; ++j) fit += b[j] * rows[i][j - 1];
        rss += (y[i] - fit) * (y[i] - fit);
    }
    b.push_back(rss);
    return b;
}

// Lag-1 Granger F from the normal-equations oracle.
inline long double granger_f_oracle(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<std::vector<double>> restricted, unrestricted;
    std::vector<double> resp;
    for (std::size_t t = 1; t < y.size(); ++t) {
        restricted.push_back({y[t - 1]});
        unrestricted.push_back({y[t - 1], x[t - 1]});
        resp.push_back(y[t]);
    }
    const long double rss_r = ols_normal_equations(restricted, resp).back();
    const long double rss_u = ols_normal_equations(unrestricted, resp).back();
    const long double df = static_cast<long double>(resp.size()) - 3.0L;
    return (rss_r - rss_u) / (rss_u / df);
}

// P(F > f) by composite Simpson on the density, after x = t² so that the
// d1 = 1 singularity at 0 disappears.
inline double f_sf_quadrature(double f, double d1, double d2, int intervals = 20000) {
    const double log_c = std::lgamma((d1 + d2) / 2) - std::lgamma(d1 / 2) - std::lgamma(d2 / 2) +
                         d1 / 2 * std::log(d1 / d2);
    auto integrand = [&](double t) {
        if (t == 0.0) return d1 == 1.0 ? 2.0 * std::exp(log_c) : 0.0;
        const double x = t * t;
        const double log_pdf = log_c + (d1 / 2 - 1) * std::log(x) - (d1 + d2) / 2 * std::log1p(d1 * x / d2);
        return std::exp(log_pdf) * 2 * t;
    };
    const double upper = std::sqrt(f);
    const double h = upper / intervals;
    double s = integrand(0) + integrand(upper);
    for (int i = 1; i < intervals; ++i) s += integrand(i * h) * (i % 2 ? 4 : 2);
    return 1.0 - s * h / 3;
}

// O(n²) k-th neighbour distance under the max-norm.
inline std::vector<double> brute_kth_distances(const std::vector<double>& coords, std::size_t dim, std::size_t k) {
    const std::size_t n = coords.size() / dim;
    std::vector<double> out(n), d;
    for (std::size_t i = 0; i < n; ++i) {
        d.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double m = 0;
            for (std::size_t c = 0; c < dim; ++c) m = std::max(m, std::fabs(coords[i * dim + c] - coords[j * dim + c]));
            d.push_back(m);
        }
        std::nth_element(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k - 1), d.end());
        out[i] = d[k - 1];
    }
    return out;
}

inline std::vector<double> normal_draws(aspectstat::SeededRng& rng, std::size_t n, double sd = 1.0) {
    std::vector<double> v(n);
    for (auto& e : v) e = rng.normal(0.0, sd);
    return v;
}

inline std::vector<double> uniform_draws(aspectstat::SeededRng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& e : v) e = rng.uniform();
    return v;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("aspectstat_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& leaf) const { return path_ / leaf; }

private:
    std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& p, const std::string& text) {
    std::filesystem::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
}

inline std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testsupport
