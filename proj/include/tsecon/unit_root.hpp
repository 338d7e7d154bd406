#pragma once

#include <map>
#include <string_view>
#include <variant>

#include "tsecon/core_data.hpp"

namespace tsecon {

/// Deterministic terms in the Dickey-Fuller regression.
enum class DetCase { none, constant, constant_trend };

std::string_view to_string(DetCase c);
DetCase det_case_from_string(std::string_view s);

enum class InfoCriterion { aic, sic };

struct FixedLag {
    int p = 0;
};
struct AutoLag {
    int max_p = 4;
    InfoCriterion criterion = InfoCriterion::aic;
};
using LagSpec = std::variant<FixedLag, AutoLag>;

/// Significance levels with tabulated critical values.
enum class Level { pct1, pct5, pct10 };

double level_value(Level level);
Level level_from_value(double alpha);

struct AdfResult {
    /// t-ratio on the lagged level.
    double statistic = 0.0;
    DetCase det_case = DetCase::constant;
    int lags_used = 0;
    std::map<Level, double> critical_values;
    /// statistic < 5% critical value
    bool reject_at_5pct = false;
    int nobs = 0;

    bool rejects(Level level) const { return statistic < critical_values.at(level); }
};

/// Augmented Dickey-Fuller regression
///   dy_t = [a] + [b t] + g y_{t-1} + sum_{i=1..p} d_i dy_{t-i} + e_t
/// with the statistic taken as the t-ratio on g. Automatic lag selection
/// fits every p in 0..max_p on the sample implied by max_p.
AdfResult adf_test(const TimeSeries& s, DetCase det_case, const LagSpec& lag_spec);

/// Finite-sample critical values from response surfaces b_inf + b1/T + b2/T^2.
std::map<Level, double> adf_critical_values(DetCase det_case, int nobs);

/// Smallest d <= max_d whose d-th difference rejects a unit root at 5%.
int integration_order(const TimeSeries& s, DetCase det_case, const LagSpec& lag_spec, int max_d = 2);

}  // namespace tsecon
