#include "tsecon/unit_root.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "tsecon/errors.hpp"
#include "tsecon/linalg.hpp"

namespace tsecon {

std::string_view to_string(DetCase c) {
    switch (c) {
        case DetCase::none: return "none";
        case DetCase::constant: return "constant";
        case DetCase::constant_trend: return "constant_trend";
    }
    return "?";
}

DetCase det_case_from_string(std::string_view s) {
    if (s == "none" || s == "n") return DetCase::none;
    if (s == "constant" || s == "c") return DetCase::constant;
    if (s == "constant_trend" || s == "ct") return DetCase::constant_trend;
    throw ConfigError("unknown deterministic case '" + std::string(s) + "'");
}

double level_value(Level level) {
    switch (level) {
        case Level::pct1: return 0.01;
        case Level::pct5: return 0.05;
        case Level::pct10: return 0.10;
    }
    return 0.05;
}

Level level_from_value(double alpha) {
    if (std::abs(alpha - 0.01) < 1e-12) return Level::pct1;
    if (std::abs(alpha - 0.05) < 1e-12) return Level::pct5;
    if (std::abs(alpha - 0.10) < 1e-12) return Level::pct10;
    throw ConfigError("significance level must be 0.01, 0.05 or 0.10");
}

namespace {

// MacKinnon (1991) response surfaces for the single-series tau statistic,
// rows 1%, 5%, 10%; columns b_inf, b1, b2.
struct Surface {
    double b_inf, b1, b2;
};
constexpr std::array<Surface, 3> kNone{{{-2.5658, -1.960, -10.04}, {-1.9393, -0.398, 0.0}, {-1.6156, -0.181, 0.0}}};
constexpr std::array<Surface, 3> kConstant{{{-3.4336, -5.999, -29.25}, {-2.8621, -2.738, -8.36}, {-2.5671, -1.438, -4.48}}};
constexpr std::array<Surface, 3> kTrend{{{-3.9638, -8.353, -47.44}, {-3.4126, -4.039, -17.83}, {-3.1279, -2.418, -7.58}}};

const std::array<Surface, 3>& surfaces(DetCase c) {
    switch (c) {
        case DetCase::none: return kNone;
        case DetCase::constant: return kConstant;
        case DetCase::constant_trend: return kTrend;
    }
    return kConstant;
}

int deterministic_count(DetCase c) {
    return c == DetCase::none ? 0 : (c == DetCase::constant ? 1 : 2);
}

/// Design for lag p on rows t = first..n-1 of the level series.
/// Column order: [deterministics], y_{t-1}, dy_{t-1}, ..., dy_{t-p}.
void build_adf_design(std::span<const double> y, DetCase det_case, int p, int first, Matrix& X, Vector& dy) {
    const int n = static_cast<int>(y.size());
    const int rows = n - first;
    const int ndet = deterministic_count(det_case);
    X.resize(rows, ndet + 1 + p);
    dy.resize(rows);
    for (int r = 0; r < rows; ++r) {
        const int t = first + r;
        int c = 0;
        if (ndet >= 1) X(r, c++) = 1.0;
        if (ndet >= 2) X(r, c++) = static_cast<double>(t);
        X(r, c++) = y[t - 1];
        for (int i = 1; i <= p; ++i) X(r, c++) = y[t - i] - y[t - i - 1];
        dy[r] = y[t] - y[t - 1];
    }
}

double info_criterion(const RegressionFit& fit, InfoCriterion ic) {
    const double T = fit.nobs;
    const double base = std::log(fit.rss / T);
    const double k = fit.nparams;
    return ic == InfoCriterion::aic ? base + 2.0 * k / T : base + k * std::log(T) / T;
}

}  // namespace

std::map<Level, double> adf_critical_values(DetCase det_case, int nobs) {
    if (nobs < 20) {
        throw SampleTooSmallError("ADF critical values need at least 20 observations, got " + std::to_string(nobs));
    }
    const auto& s = surfaces(det_case);
    const double T = nobs;
    std::map<Level, double> out;
    const std::array<Level, 3> levels{Level::pct1, Level::pct5, Level::pct10};
    for (std::size_t i = 0; i < 3; ++i) out[levels[i]] = s[i].b_inf + s[i].b1 / T + s[i].b2 / (T * T);
    return out;
}

AdfResult adf_test(const TimeSeries& s, DetCase det_case, const LagSpec& lag_spec) {
    const auto y = s.values();
    const int n = static_cast<int>(y.size());
    const bool automatic = std::holds_alternative<AutoLag>(lag_spec);
    const int max_p = automatic ? std::get<AutoLag>(lag_spec).max_p : std::get<FixedLag>(lag_spec).p;
    if (max_p < 0) throw ConfigError("ADF lag order must be non-negative");
    if (n < max_p + 10) {
        throw DegreesOfFreedomError("ADF on '" + s.name() + "' needs at least " + std::to_string(max_p + 10) +
                                    " observations, got " + std::to_string(n));
    }

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double scale = 1.0;
    for (int t = 1; t < n; ++t) {
        const double d = y[t] - y[t - 1];
        lo = std::min(lo, d);
        hi = std::max(hi, d);
        scale = std::max(scale, std::abs(y[t]));
    }
    if (hi - lo <= 1e-12 * scale) {
        throw ZeroVarianceError("series '" + s.name() + "' has deterministic increments");
    }

    const int first = max_p + 1;
    Matrix X;
    Vector dy;
    int chosen = max_p;
    if (automatic) {
        const auto ic = std::get<AutoLag>(lag_spec).criterion;
        double best = std::numeric_limits<double>::infinity();
        for (int p = 0; p <= max_p; ++p) {
            build_adf_design(y, det_case, p, first, X, dy);
            const double value = info_criterion(ols_fit(X, dy), ic);
            if (value < best - 1e-14) {
                best = value;
                chosen = p;
            }
        }
    }
    build_adf_design(y, det_case, chosen, first, X, dy);
    const auto fit = ols_fit(X, dy);
    if (fit.sigma2 <= 1e-26 * scale * scale) {
        throw ZeroVarianceError("ADF regression on '" + s.name() + "' fits exactly");
    }

    AdfResult res;
    res.det_case = det_case;
    res.lags_used = chosen;
    res.nobs = fit.nobs;
    res.statistic = fit.t_stats[deterministic_count(det_case)];
    res.critical_values = adf_critical_values(det_case, res.nobs);
    res.reject_at_5pct = res.statistic < res.critical_values.at(Level::pct5);
    return res;
}

int integration_order(const TimeSeries& s, DetCase det_case, const LagSpec& lag_spec, int max_d) {
    TimeSeries current = s;
    for (int d = 0; d <= max_d; ++d) {
        if (d > 0) current = difference(current, 1);
        if (adf_test(current, det_case, lag_spec).reject_at_5pct) return d;
    }
    throw OrderUndeterminedError("'" + s.name() + "' does not reject a unit root up to order " +
                                 std::to_string(max_d));
}

}  // namespace tsecon
