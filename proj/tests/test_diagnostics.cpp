#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "tsecon/diagnostics.hpp"
#include "tsecon/errors.hpp"
#include "tsecon/montecarlo.hpp"

using namespace tsecon;

namespace {

std::vector<double> normal_draws(int n, mc::Rng& rng) {
    std::normal_distribution<double> z(0.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = z(rng);
    return v;
}

struct Regression {
    Matrix design;
    Vector residuals;
};

// y = 1 + 0.5 x + u with u_t = phi u_{t-1} + e_t; residuals from OLS on [1, x].
Regression regression_with_ar_errors(int n, double phi, mc::Rng& rng) {
    std::normal_distribution<double> z(0.0, 1.0);
    Matrix X(n, 2);
    Vector y(n);
    double u = 0.0;
    for (int t = 0; t < n; ++t) {
        X(t, 0) = 1.0;
        X(t, 1) = z(rng);
        u = phi * u + z(rng);
        y[t] = 1.0 + 0.5 * X(t, 1) + u;
    }
    return {X, ols_fit(X, y).residuals};
}

}  // namespace

// ===========================================================================
// Jarque-Bera
// ===========================================================================

TEST(JarqueBeraTest, NormalMomentsGiveZero) {
    const auto jb = jb_from_moments(0.0, 3.0, 100);
    EXPECT_EQ(jb.statistic, 0.0);
    EXPECT_EQ(jb.p_value, 1.0);
}

TEST(JarqueBeraTest, ReferenceResidualMoments) {
    const auto jb = jb_from_moments(-0.104186, 1.732370, 36);
    EXPECT_NEAR(jb.statistic, 2.4755, 5e-4);
    EXPECT_NEAR(jb.p_value, 0.2900, 5e-4);
}

TEST(JarqueBeraTest, LinearInSampleSize) {
    for (double s : {-0.8, 0.0, 0.3}) {
        for (double k : {1.7, 3.0, 5.2}) {
            const double a = jb_from_moments(s, k, 50).statistic;
            EXPECT_NEAR(jb_from_moments(s, k, 100).statistic, 2.0 * a, 1e-12 * (1.0 + a));
            EXPECT_NEAR(jb_from_moments(s, k, 350).statistic, 7.0 * a, 1e-12 * (1.0 + a));
        }
    }
}

TEST(JarqueBeraTest, SampleMomentsByHand) {
    const std::vector<double> x{1.0, 2.0, 2.0, 3.0, 3.0, 3.0, 4.0, 9.0};
    const auto r = jarque_bera(x);
    // mean 27/8; central moments computed from the deviations.
    const double mean = 27.0 / 8.0;
    double m2 = 0, m3 = 0, m4 = 0;
    for (double v : x) {
        const double d = v - mean;
        m2 += d * d / 8.0;
        m3 += d * d * d / 8.0;
        m4 += d * d * d * d / 8.0;
    }
    EXPECT_DOUBLE_EQ(r.mean, mean);
    EXPECT_DOUBLE_EQ(r.median, 3.0);
    EXPECT_EQ(r.min, 1.0);
    EXPECT_EQ(r.max, 9.0);
    EXPECT_NEAR(r.std_dev, std::sqrt(m2 * 8.0 / 7.0), 1e-12);
    EXPECT_NEAR(r.skewness, m3 / std::pow(m2, 1.5), 1e-12);
    EXPECT_NEAR(r.kurtosis, m4 / (m2 * m2), 1e-12);
    EXPECT_NEAR(r.jarque_bera, 8.0 * (r.skewness * r.skewness / 6.0 + std::pow(r.kurtosis - 3.0, 2) / 24.0), 1e-12);
    EXPECT_EQ(r.nobs, 8);
}

TEST(JarqueBeraTest, AffineInvariance) {
    mc::Rng rng(3);
    const auto x = normal_draws(200, rng);
    const auto base = jarque_bera(x);
    for (auto [a, b] : {std::pair{3.5, -10.0}, std::pair{0.01, 400.0}, std::pair{-2.0, 1.0}}) {
        std::vector<double> y(x);
        for (auto& v : y) v = a * v + b;
        const auto r = jarque_bera(y);
        EXPECT_NEAR(r.jarque_bera, base.jarque_bera, 1e-9);
        EXPECT_NEAR(r.kurtosis, base.kurtosis, 1e-9);
        EXPECT_NEAR(r.skewness, a > 0 ? base.skewness : -base.skewness, 1e-9);
    }
}

TEST(JarqueBeraTest, NormalSamplesRarelyReject) {
    const auto ok = mc::replicate(500, 5, [](int, mc::Rng& rng) {
        return jarque_bera(normal_draws(10000, rng)).p_value > 0.01 ? 1 : 0;
    });
    EXPECT_GE(std::accumulate(ok.begin(), ok.end(), 0), 490);
}

TEST(JarqueBeraTest, SkewedSamplesReject) {
    mc::Rng rng(6);
    std::exponential_distribution<double> e(1.0);
    std::vector<double> x(500);
    for (auto& v : x) v = e(rng);
    EXPECT_LT(jarque_bera(x).p_value, 1e-6);
}

TEST(JarqueBeraTest, Errors) {
    EXPECT_THROW(jarque_bera(std::vector<double>{1, 2, 3, 4, 5, 6, 7}), SampleTooSmallError);
    EXPECT_THROW(jb_from_moments(0.0, 3.0, 7), SampleTooSmallError);
    EXPECT_THROW(jarque_bera(std::vector<double>(20, 2.5)), ZeroVarianceError);
}

// ===========================================================================
// Breusch-Godfrey
// ===========================================================================

TEST(BreuschGodfreyTest, LmIsNTimesAuxiliaryRSquared) {
    mc::Rng rng(7);
    auto reg = regression_with_ar_errors(80, 0.3, rng);
    const int n = 80, h = 2;
    Matrix aux(n, 4);
    aux.leftCols(2) = reg.design;
    for (int t = 0; t < n; ++t) {
        aux(t, 2) = t >= 1 ? reg.residuals[t - 1] : 0.0;
        aux(t, 3) = t >= 2 ? reg.residuals[t - 2] : 0.0;
    }
    const Vector b = aux.colPivHouseholderQr().solve(reg.residuals);
    const double rss = (reg.residuals - aux * b).squaredNorm();
    // The residuals of a regression with a constant have mean zero, so centred and
    // uncentred R^2 coincide.
    const double r2 = 1.0 - rss / reg.residuals.squaredNorm();

    const auto bg = breusch_godfrey(reg.design, reg.residuals, h);
    EXPECT_NEAR(bg.r_squared, r2, 1e-12);
    EXPECT_NEAR(bg.lm_stat, n * r2, 1e-10);
    EXPECT_NEAR(bg.lm_p_value, std::exp(-n * r2 / 2.0), 1e-12);
    EXPECT_NEAR(bg.f_stat, (r2 / h) / ((1.0 - r2) / (n - 2 - h)), 1e-10);
    EXPECT_GT(bg.f_p_value, 0.0);
    EXPECT_LT(bg.f_p_value, 1.0);
    EXPECT_EQ(bg.lags, 2);
    EXPECT_EQ(bg.nobs, 80);
}

TEST(BreuschGodfreyTest, WhiteNoiseRarelyRejects) {
    const auto ok = mc::replicate(500, 11, [](int, mc::Rng& rng) {
        auto reg = regression_with_ar_errors(200, 0.0, rng);
        return breusch_godfrey(reg.design, reg.residuals, 2).lm_p_value > 0.05 ? 1 : 0;
    });
    EXPECT_GE(std::accumulate(ok.begin(), ok.end(), 0), 450);
}

TEST(BreuschGodfreyTest, AutocorrelatedErrorsReject) {
    const auto hits = mc::replicate(500, 13, [](int, mc::Rng& rng) {
        auto reg = regression_with_ar_errors(200, 0.8, rng);
        return breusch_godfrey(reg.design, reg.residuals, 2).lm_p_value < 0.01 ? 1 : 0;
    });
    EXPECT_GE(std::accumulate(hits.begin(), hits.end(), 0), 475);
}

TEST(BreuschGodfreyTest, Errors) {
    Matrix X = Matrix::Ones(10, 1);
    EXPECT_THROW(breusch_godfrey(X, Vector::Zero(10), 2), ZeroVarianceError);
    EXPECT_THROW(breusch_godfrey(X, Vector::LinSpaced(10, -1.0, 1.0), 0), ConfigError);
    EXPECT_THROW(breusch_godfrey(X, Vector::LinSpaced(9, -1.0, 1.0), 1), DataError);
    EXPECT_THROW(breusch_godfrey(Matrix::Ones(3, 1), Vector::LinSpaced(3, -1.0, 1.0), 2), DegreesOfFreedomError);
}
