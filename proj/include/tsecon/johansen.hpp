#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "tsecon/core_data.hpp"
#include "tsecon/linalg.hpp"
#include "tsecon/unit_root.hpp"

namespace tsecon {

/// Deterministic specification of the cointegrated VAR, numbered as in the
/// usual five-case classification.
enum class JohansenCase {
    restricted_constant = 2,    ///< constant only inside the cointegrating relation
    unrestricted_constant = 3,  ///< free intercept, linear trends in levels
    restricted_trend = 4,       ///< free intercept, trend inside the relation
};

std::string_view to_string(JohansenCase c);
JohansenCase johansen_case_from_string(std::string_view s);

enum class RankStatistic { trace, max_eigen };

std::string_view to_string(RankStatistic s);

/// Reduced-rank regression output. The relation space has `variables` rows
/// plus one for a restricted constant or trend.
struct JohansenEigen {
    /// Descending, one per variable, each in [0, 1).
    Vector eigenvalues;
    /// Columns are the eigenvectors of the pencil, each scaled so its first
    /// nonzero coordinate is +1.
    Matrix eigenvectors;
    Matrix S00;
    Matrix S01;
    Matrix S11;
    /// Number of dY observations regressed.
    int nobs = 0;
    int variables = 0;
    int k_var = 1;
    JohansenCase det_case = JohansenCase::unrestricted_constant;

    Matrix beta(int r) const { return eigenvectors.leftCols(r); }
    /// S01 b (b' S11 b)^-1
    Matrix alpha(int r) const;
};

/// Regresses dY_t and the (augmented) Y_{t-1} on the free deterministics and
/// k_var - 1 lagged differences, forms S_ij from the residuals and solves
/// det(mu S11 - S10 S00^-1 S01) = 0.
JohansenEigen johansen_eigen(const Dataset& ds, int k_var,
                             JohansenCase det_case = JohansenCase::unrestricted_constant);

/// -T sum_{i=r+1..k} ln(1 - mu_i)
double trace_statistic(std::span<const double> eigenvalues, int nobs, int r);

/// -T ln(1 - mu_{r+1})
double max_eigen_statistic(std::span<const double> eigenvalues, int nobs, int r);

/// Embedded asymptotic critical values for 1 <= k - r <= 6.
double johansen_critical_value(RankStatistic kind, int k_minus_r, JohansenCase det_case, Level level);

/// Approximate p-value: log-linear interpolation through the 10%, 5% and 1%
/// critical values, or the chi2(1) tail when the limit is chi2(1)
/// (unrestricted constant, k - r = 1).
double johansen_p_value(RankStatistic kind, double statistic, int k_minus_r, JohansenCase det_case);

/// Smallest r whose null is not rejected (statistic <= critical value);
/// statistics.size() when every null is rejected.
int decide_rank(std::span<const double> statistics, std::span<const double> critical_values);

struct JohansenResult {
    JohansenCase det_case = JohansenCase::unrestricted_constant;
    int k_var = 1;
    int nobs = 0;
    Level level = Level::pct5;
    Vector eigenvalues;
    std::vector<double> trace_stats;
    std::vector<double> max_eig_stats;
    std::vector<double> trace_critical;
    std::vector<double> max_eig_critical;
    std::vector<double> trace_p;
    std::vector<double> max_eig_p;
    int trace_rank = 0;
    int max_eig_rank = 0;
    /// Taken from the trace sequence.
    int decided_rank = 0;
    /// Relation-space rows x decided_rank.
    Matrix beta;
    /// variables x decided_rank.
    Matrix alpha;
};

JohansenResult johansen_test(const Dataset& ds, int k_var,
                             JohansenCase det_case = JohansenCase::unrestricted_constant,
                             Level level = Level::pct5);

}  // namespace tsecon
