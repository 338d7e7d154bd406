#include "tsecon/simulate.hpp"

#include <algorithm>

#include "tsecon/errors.hpp"

namespace tsecon::mc {

namespace {

Vector draw(Eigen::Index k, Rng& rng) {
    std::normal_distribution<double> eps(0.0, 1.0);
    Vector e(k);
    for (Eigen::Index i = 0; i < k; ++i) e[i] = eps(rng);
    return e;
}

Dataset to_dataset(const Matrix& Y) {
    std::vector<TimeSeries> cols;
    for (Eigen::Index j = 0; j < Y.cols(); ++j) {
        std::vector<double> v(Y.col(j).data(), Y.col(j).data() + Y.rows());
        cols.emplace_back("y" + std::to_string(j + 1), 1, std::move(v));
    }
    return Dataset(std::move(cols));
}

}  // namespace

TimeSeries white_noise(const std::string& name, int n, Rng& rng, double sd) {
    std::normal_distribution<double> eps(0.0, sd);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = eps(rng);
    return TimeSeries(name, 1, std::move(v));
}

TimeSeries random_walk(const std::string& name, int n, Rng& rng, double drift) {
    std::normal_distribution<double> eps(0.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(n));
    double level = 0.0;
    for (auto& x : v) {
        level += drift + eps(rng);
        x = level;
    }
    return TimeSeries(name, 1, std::move(v));
}

TimeSeries ar1(const std::string& name, int n, double phi, Rng& rng) {
    std::normal_distribution<double> eps(0.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(n));
    double level = 0.0;
    for (int burn = 0; burn < 100; ++burn) level = phi * level + eps(rng);
    for (auto& x : v) {
        level = phi * level + eps(rng);
        x = level;
    }
    return TimeSeries(name, 1, std::move(v));
}

Dataset simulate_vecm(const VecmProcess& process, int n, Rng& rng, int burn_in) {
    const auto k = process.alpha.rows();
    if (process.beta.rows() != k || process.beta.cols() != process.alpha.cols()) {
        throw ConfigError("alpha and beta shapes disagree");
    }
    const Vector c = process.intercept.size() == 0 ? Vector::Zero(k) : process.intercept;
    const Matrix L = process.noise_factor.size() == 0 ? Matrix::Identity(k, k) : process.noise_factor;
    const Matrix pi = process.alpha * process.beta.transpose();
    const auto lags = static_cast<int>(process.gamma.size());
    const int total = n + burn_in;

    Matrix Y = Matrix::Zero(total, k);
    Matrix dY = Matrix::Zero(total, k);
    for (int t = 1; t < total; ++t) {
        Vector d = c + pi * Y.row(t - 1).transpose() + L * draw(k, rng);
        for (int j = 1; j <= lags; ++j) {
            if (t - j >= 1) d += process.gamma[static_cast<std::size_t>(j - 1)] * dY.row(t - j).transpose();
        }
        dY.row(t) = d.transpose();
        Y.row(t) = Y.row(t - 1) + d.transpose();
    }
    return to_dataset(Y.bottomRows(n));
}

Dataset simulate_var(const Vector& intercept, const std::vector<Matrix>& a, int n, Rng& rng, int burn_in) {
    const auto k = intercept.size();
    const auto p = static_cast<int>(a.size());
    const int total = n + burn_in;
    Matrix Y = Matrix::Zero(total, k);
    for (int t = 0; t < total; ++t) {
        Vector y = intercept + draw(k, rng);
        for (int j = 1; j <= p; ++j) {
            if (t - j >= 0) y += a[static_cast<std::size_t>(j - 1)] * Y.row(t - j).transpose();
        }
        Y.row(t) = y.transpose();
    }
    return to_dataset(Y.bottomRows(n));
}

}  // namespace tsecon::mc
