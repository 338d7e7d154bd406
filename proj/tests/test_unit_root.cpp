#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "tsecon/errors.hpp"
#include "tsecon/montecarlo.hpp"
#include "tsecon/simulate.hpp"
#include "tsecon/unit_root.hpp"

using namespace tsecon;

namespace {

TimeSeries cumulate(const TimeSeries& s) {
    std::vector<double> v(s.size());
    double acc = 0.0;
    for (std::size_t t = 0; t < s.size(); ++t) v[t] = acc += s[t];
    return TimeSeries(s.name(), s.start_year(), v);
}

}  // namespace

// ===========================================================================
// adf_test
// ===========================================================================

TEST(AdfTest, LinearSeriesIsDegenerate) {
    std::vector<double> v(50);
    std::iota(v.begin(), v.end(), 1.0);
    EXPECT_THROW(adf_test(TimeSeries("t", 1, v), DetCase::constant_trend, FixedLag{0}), ZeroVarianceError);
    EXPECT_THROW(adf_test(TimeSeries("c", 1, std::vector<double>(50, 4.0)), DetCase::constant, FixedLag{0}),
                 ZeroVarianceError);
}

TEST(AdfTest, TooShortSample) {
    mc::Rng rng(1);
    auto s = mc::random_walk("x", 13, rng);
    EXPECT_THROW(adf_test(s, DetCase::constant, AutoLag{4, InfoCriterion::aic}), DegreesOfFreedomError);
}

TEST(AdfTest, NoDeterministicsMatchesHandTRatio) {
    mc::Rng rng(2);
    for (int rep = 0; rep < 20; ++rep) {
        auto s = mc::random_walk("x", 60 + rep, rng);
        const auto y = s.values();
        double syy = 0.0, sdy = 0.0;
        for (std::size_t t = 1; t < y.size(); ++t) {
            syy += y[t - 1] * y[t - 1];
            sdy += y[t - 1] * (y[t] - y[t - 1]);
        }
        const double g = sdy / syy;
        double rss = 0.0;
        for (std::size_t t = 1; t < y.size(); ++t) {
            const double e = (y[t] - y[t - 1]) - g * y[t - 1];
            rss += e * e;
        }
        const double n = static_cast<double>(y.size() - 1);
        const double tau = g / std::sqrt(rss / (n - 1.0) / syy);
        auto res = adf_test(s, DetCase::none, FixedLag{0});
        EXPECT_NEAR(res.statistic, tau, 1e-10);
        EXPECT_EQ(res.nobs, static_cast<int>(n));
    }
}

TEST(AdfTest, AffineInvarianceWithConstant) {
    mc::Rng rng(3);
    auto s = mc::random_walk("x", 120, rng);
    std::vector<double> v(s.values().begin(), s.values().end());
    for (auto& x : v) x = 37.5 * x - 1200.0;
    TimeSeries scaled("x", 1, v);
    for (const LagSpec spec : {LagSpec{FixedLag{0}}, LagSpec{FixedLag{3}}, LagSpec{AutoLag{4, InfoCriterion::sic}}}) {
        const auto a = adf_test(s, DetCase::constant, spec);
        const auto b = adf_test(scaled, DetCase::constant, spec);
        EXPECT_NEAR(a.statistic, b.statistic, 1e-8);
        EXPECT_EQ(a.lags_used, b.lags_used);
    }
}

TEST(AdfTest, ResultInvariants) {
    mc::Rng rng(4);
    for (int rep = 0; rep < 30; ++rep) {
        auto s = rep % 2 == 0 ? mc::random_walk("x", 80, rng) : mc::ar1("x", 80, 0.5, rng);
        for (DetCase c : {DetCase::none, DetCase::constant, DetCase::constant_trend}) {
            auto res = adf_test(s, c, AutoLag{4, InfoCriterion::aic});
            EXPECT_LE(res.lags_used, 4);
            EXPECT_GE(res.lags_used, 0);
            EXPECT_EQ(res.nobs, 80 - 5);
            EXPECT_EQ(res.reject_at_5pct, res.statistic < res.critical_values.at(Level::pct5));
            EXPECT_EQ(res.reject_at_5pct, res.rejects(Level::pct5));
        }
    }
}

TEST(AdfTest, CommonSampleLagSelectionPicksTrueOrder) {
    // dy_t = 0.6 dy_{t-1} - 0.3 dy_{t-2} + e_t: a unit root with two lagged differences.
    mc::Rng rng(5);
    int hits = 0;
    for (int rep = 0; rep < 50; ++rep) {
        std::normal_distribution<double> z(0.0, 1.0);
        std::vector<double> y(400, 0.0);
        double d1 = 0.0, d2 = 0.0;
        for (std::size_t t = 1; t < y.size(); ++t) {
            const double d = 0.6 * d1 - 0.3 * d2 + z(rng);
            y[t] = y[t - 1] + d;
            d2 = d1;
            d1 = d;
        }
        auto res = adf_test(TimeSeries("x", 1, y), DetCase::constant, AutoLag{6, InfoCriterion::sic});
        hits += res.lags_used == 2;
    }
    EXPECT_GE(hits, 40);
}

TEST(AdfTest, SizeUnderRandomWalk) {
    const auto rejects = mc::replicate(1000, 101, [](int, mc::Rng& rng) {
        return adf_test(mc::random_walk("x", 200, rng), DetCase::constant, FixedLag{0}).reject_at_5pct ? 1 : 0;
    });
    const int count = std::accumulate(rejects.begin(), rejects.end(), 0);
    EXPECT_LE(count, 70);  // non-rejection in >= 93% of replications
}

TEST(AdfTest, PowerUnderWhiteNoise) {
    const auto rejects = mc::replicate(1000, 202, [](int, mc::Rng& rng) {
        return adf_test(mc::white_noise("x", 200, rng), DetCase::constant, FixedLag{0}).reject_at_5pct ? 1 : 0;
    });
    const int count = std::accumulate(rejects.begin(), rejects.end(), 0);
    EXPECT_GE(count, 990);
}

// ===========================================================================
// Critical values
// ===========================================================================

TEST(AdfCriticalValuesTest, OrderedAndConverging) {
    for (DetCase c : {DetCase::none, DetCase::constant, DetCase::constant_trend}) {
        const auto asym = adf_critical_values(c, 100000000);
        double prev_gap = std::numeric_limits<double>::infinity();
        for (int T : {20, 25, 40, 60, 100, 250, 500, 1000, 10000}) {
            const auto cv = adf_critical_values(c, T);
            EXPECT_LT(cv.at(Level::pct1), cv.at(Level::pct5));
            EXPECT_LT(cv.at(Level::pct5), cv.at(Level::pct10));
            const double gap = std::abs(cv.at(Level::pct5) - asym.at(Level::pct5));
            EXPECT_LE(gap, prev_gap);
            prev_gap = gap;
        }
    }
}

TEST(AdfCriticalValuesTest, TooFewObservations) {
    EXPECT_THROW(adf_critical_values(DetCase::constant, 19), SampleTooSmallError);
    EXPECT_NO_THROW(adf_critical_values(DetCase::constant, 20));
}

TEST(AdfCriticalValuesTest, AsymptoticValues) {
    EXPECT_NEAR(adf_critical_values(DetCase::constant, 100000000).at(Level::pct5), -2.86, 0.01);
    EXPECT_NEAR(adf_critical_values(DetCase::constant_trend, 100000000).at(Level::pct5), -3.41, 0.01);
}

// Monte Carlo oracle: the Dickey-Fuller t-ratio quantiles from simulated
// random walks, computed without adf_test.
TEST(AdfCriticalValuesTest, MonteCarloOracle) {
    for (auto [c, expected] : {std::pair{DetCase::constant, -2.86}, std::pair{DetCase::constant_trend, -3.41}}) {
        auto draws = mc::df_tau_draws(c, 1000, 500000, 77);
        const double q5 = mc::empirical_quantile(draws, 0.05);
        EXPECT_NEAR(q5, expected, 0.01);
        EXPECT_NEAR(q5, adf_critical_values(c, 1000).at(Level::pct5), 0.015);
    }
}

TEST(AdfCriticalValuesTest, MonteCarloAgreesWithAdfTest) {
    // The closed-form kernel and the full regression give the same statistic.
    for (DetCase c : {DetCase::none, DetCase::constant, DetCase::constant_trend}) {
        auto draws = mc::df_tau_draws_serial(c, 50, 5, 9);
        for (int rep = 0; rep < 5; ++rep) {
            mc::Rng rng(mc::replication_seed(9, static_cast<std::uint64_t>(rep)));
            std::normal_distribution<double> z(0.0, 1.0);
            std::vector<double> y(51, 0.0);
            for (std::size_t t = 1; t < y.size(); ++t) y[t] = y[t - 1] + z(rng);
            auto res = adf_test(TimeSeries("x", 1, y), c, FixedLag{0});
            EXPECT_NEAR(res.statistic, draws[static_cast<std::size_t>(rep)], 1e-8);
        }
    }
}

// ===========================================================================
// integration_order
// ===========================================================================

TEST(IntegrationOrderTest, GenerativeClassification) {
    mc::Rng rng(31);
    int i0 = 0, i1 = 0, i2 = 0;
    const LagSpec spec = AutoLag{4, InfoCriterion::sic};
    for (int rep = 0; rep < 40; ++rep) {
        i0 += integration_order(mc::ar1("x", 200, 0.3, rng), DetCase::constant, spec) == 0;
        i1 += integration_order(mc::random_walk("x", 200, rng), DetCase::constant, spec) == 1;
        i2 += integration_order(cumulate(mc::random_walk("x", 200, rng)), DetCase::constant, spec) == 2;
    }
    EXPECT_GE(i0, 38);
    EXPECT_GE(i1, 36);
    EXPECT_GE(i2, 36);
}

TEST(IntegrationOrderTest, UndeterminedThrows) {
    // I(3): the second difference is still a random walk.
    mc::Rng rng(37);
    int undetermined = 0;
    for (int rep = 0; rep < 40; ++rep) {
        auto s = cumulate(cumulate(mc::random_walk("x", 200, rng)));
        try {
            integration_order(s, DetCase::constant, AutoLag{4, InfoCriterion::sic}, 2);
        } catch (const OrderUndeterminedError&) {
            ++undetermined;
        }
    }
    EXPECT_GE(undetermined, 34);
}

TEST(DetCaseTest, Parsing) {
    EXPECT_EQ(det_case_from_string("c"), DetCase::constant);
    EXPECT_EQ(det_case_from_string("ct"), DetCase::constant_trend);
    EXPECT_EQ(det_case_from_string("none"), DetCase::none);
    EXPECT_THROW(det_case_from_string("trend"), ConfigError);
    EXPECT_EQ(level_from_value(0.05), Level::pct5);
    EXPECT_THROW(level_from_value(0.2), ConfigError);
}
