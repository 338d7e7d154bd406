#include "tsecon/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "tsecon/errors.hpp"

namespace tsecon::mc {

std::uint64_t replication_seed(std::uint64_t base, std::uint64_t rep) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (rep + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

double empirical_quantile(std::vector<double> draws, double q) {
    if (draws.empty()) throw ConfigError("quantile of an empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("quantile level outside [0, 1]");
    std::sort(draws.begin(), draws.end());
    const double pos = q * static_cast<double>(draws.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, draws.size() - 1);
    const double w = pos - static_cast<double>(lo);
    return (1.0 - w) * draws[lo] + w * draws[hi];
}

namespace {

/// One Dickey-Fuller t-ratio via the normal equations of a regression with at
/// most three columns.
double df_tau_once(DetCase det_case, int T, Rng& rng) {
    std::normal_distribution<double> eps(0.0, 1.0);
    const int ndet = det_case == DetCase::none ? 0 : (det_case == DetCase::constant ? 1 : 2);
    const int p = ndet + 1;
    Eigen::Matrix3d xtx = Eigen::Matrix3d::Zero();
    Eigen::Vector3d xty = Eigen::Vector3d::Zero();
    double yty = 0.0;
    double level = 0.0;
    Eigen::Vector3d x;
    for (int t = 1; t <= T; ++t) {
        const double e = eps(rng);
        int c = 0;
        if (ndet >= 1) x[c++] = 1.0;
        if (ndet >= 2) x[c++] = static_cast<double>(t);
        x[c++] = level;
        for (int a = 0; a < p; ++a) {
            xty[a] += x[a] * e;
            for (int b = 0; b < p; ++b) xtx(a, b) += x[a] * x[b];
        }
        yty += e * e;
        level += e;
    }
    const auto A = xtx.topLeftCorner(p, p).eval();
    const Eigen::MatrixXd inv = A.inverse();
    const Eigen::VectorXd b = inv * xty.head(p);
    const double rss = yty - b.dot(xty.head(p));
    const double s2 = rss / (T - p);
    return b[p - 1] / std::sqrt(s2 * inv(p - 1, p - 1));
}

Dataset walks(JohansenCase det_case, int dim, int T, Rng& rng) {
    std::normal_distribution<double> eps(0.0, 1.0);
    std::vector<TimeSeries> cols;
    cols.reserve(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        const double drift = (det_case == JohansenCase::unrestricted_constant && j == 0) ? 1.0 : 0.0;
        std::vector<double> v(static_cast<std::size_t>(T + 1));
        double level = 0.0;
        for (auto& x : v) {
            level += drift + eps(rng);
            x = level;
        }
        cols.emplace_back("w" + std::to_string(j), 0, std::move(v));
    }
    return Dataset(std::move(cols));
}

std::pair<double, double> johansen_once(JohansenCase det_case, int dim, int T, Rng& rng) {
    const auto eig = johansen_eigen(walks(det_case, dim, T, rng), 1, det_case);
    const std::span<const double> mu(eig.eigenvalues.data(), static_cast<std::size_t>(dim));
    return {trace_statistic(mu, eig.nobs, 0), max_eigen_statistic(mu, eig.nobs, 0)};
}

void check_sizes(int T, int reps) {
    if (T < 10) throw ConfigError("simulation sample size must be at least 10");
    if (reps < 1) throw ConfigError("at least one replication is required");
}

JohansenDraws split(const std::vector<std::pair<double, double>>& pairs) {
    JohansenDraws out;
    out.trace.reserve(pairs.size());
    out.max_eigen.reserve(pairs.size());
    for (const auto& [tr, mx] : pairs) {
        out.trace.push_back(tr);
        out.max_eigen.push_back(mx);
    }
    return out;
}

}  // namespace

std::vector<double> df_tau_draws(DetCase det_case, int T, int reps, std::uint64_t seed) {
    check_sizes(T, reps);
    return replicate(reps, seed, [&](int, Rng& rng) { return df_tau_once(det_case, T, rng); });
}

std::vector<double> df_tau_draws_serial(DetCase det_case, int T, int reps, std::uint64_t seed) {
    check_sizes(T, reps);
    return replicate_serial(reps, seed, [&](int, Rng& rng) { return df_tau_once(det_case, T, rng); });
}

JohansenDraws johansen_null_draws(JohansenCase det_case, int dim, int T, int reps, std::uint64_t seed) {
    check_sizes(T, reps);
    if (dim < 1) throw ConfigError("dimension must be positive");
    return split(replicate(reps, seed, [&](int, Rng& rng) { return johansen_once(det_case, dim, T, rng); }));
}

JohansenDraws johansen_null_draws_serial(JohansenCase det_case, int dim, int T, int reps, std::uint64_t seed) {
    check_sizes(T, reps);
    if (dim < 1) throw ConfigError("dimension must be positive");
    return split(replicate_serial(reps, seed, [&](int, Rng& rng) { return johansen_once(det_case, dim, T, rng); }));
}

}  // namespace tsecon::mc
