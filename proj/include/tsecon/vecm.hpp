#pragma once

#include <span>
#include <string>
#include <vector>

#include "tsecon/core_data.hpp"
#include "tsecon/johansen.hpp"
#include "tsecon/linalg.hpp"

namespace tsecon {

/// One error-correction equation
///   dY_it = c_i + sum_j sum_m G_j(i,m) dY_m,t-j + sum_h lambda_ih ECT_h,t-1 + e_it.
struct VecmEquation {
    std::string name;
    RegressionFit fit;
    /// NaN when the constant is restricted to the cointegrating relation.
    double intercept = 0.0;
    /// One per cointegrating relation.
    Vector ect_coeffs;
    Vector ect_tstats;
    /// (lag_diffs x k): row j-1 holds the coefficients of dY_{t-j}.
    Matrix short_run;
    Matrix short_run_stderr;

    double ect_coeff() const { return ect_coeffs[0]; }
    double ect_tstat() const { return ect_tstats[0]; }
};

struct VecmFit {
    int rank = 0;
    int lag_diffs = 0;
    JohansenCase det_case = JohansenCase::unrestricted_constant;
    std::vector<std::string> names;
    /// Year of the first regressed dY row.
    int first_year = 0;
    int nobs = 0;
    /// Relation-space rows x rank, first nonzero coordinate of each column is 1.
    Matrix beta;
    /// (T x rank): beta' [Y_{t-1}; restricted term]
    Matrix ect;
    /// (T x k)
    Matrix dY;
    /// Shared regressors: [1,] dY lags (variable-major within each lag), ECT columns.
    Matrix design;
    Matrix residuals;
    std::vector<VecmEquation> equations;
    bool free_intercept = true;

    int variables() const { return static_cast<int>(names.size()); }
    /// Design column of dY_{source, t-lag}.
    int short_run_column(int lag, int source) const;
    int ect_column(int relation) const;
    int equation_index(const std::string& name) const;
};

/// Estimates beta by reduced-rank regression at the same k_var and case, then
/// fits each equation by OLS.
VecmFit fit_vecm(const Dataset& ds, int rank, int k_var,
                 JohansenCase det_case = JohansenCase::unrestricted_constant);

/// As fit_vecm with a supplied cointegrating matrix (relation rows x rank).
VecmFit fit_vecm_with_beta(const Dataset& ds, const Matrix& beta, int k_var,
                           JohansenCase det_case = JohansenCase::unrestricted_constant);

struct LongRunCausality {
    bool significant = false;
    double lambda = 0.0;
    double tstat = 0.0;
};

/// Significant when lambda < 0 and |t| > 1.96.
LongRunCausality long_run_causality(double lambda, double tstat);
LongRunCausality long_run_causality(const VecmFit& fit, int equation, int relation = 0);

struct WaldResult {
    double chi_square = 0.0;
    int df = 0;
    double p_value = 1.0;
    std::string target_equation;
    std::vector<std::string> excluded_block;
};

/// (Rb)' [R V R']^-1 (Rb) for R selecting `indices` of b.
double wald_statistic(const Vector& coefficients, const Matrix& covariance, std::span<const int> indices);

/// Joint exclusion of every lagged difference of `source` from equation `target`.
/// The ECT is never part of the restriction set.
WaldResult wald_short_run(const VecmFit& fit, int target, int source);
WaldResult wald_short_run(const VecmFit& fit, const std::string& target, const std::string& source);

/// Joint exclusion of several sources' lagged differences from one equation.
WaldResult wald_block(const VecmFit& fit, int target, std::span<const int> sources);

struct CausalityEntry {
    std::string source;
    std::string target;
    WaldResult wald;
    bool significant = false;
    /// The reverse ordering is significant too.
    bool bidirectional = false;
};

/// Every ordered pair source -> target with source != target.
std::vector<CausalityEntry> causality_matrix(const VecmFit& fit, double level = 0.05);

}  // namespace tsecon
