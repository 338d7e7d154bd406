#pragma once

#include <optional>
#include <vector>

#include "tsecon/core_data.hpp"
#include "tsecon/linalg.hpp"

namespace tsecon {

/// Unrestricted VAR(p) with an intercept, estimated equation by equation.
struct VarFit {
    int lag_order = 0;
    Vector intercept;
    /// lag_coefficients[j](i, m): effect of variable m at lag j+1 on equation i.
    std::vector<Matrix> lag_coefficients;
    /// (T x k)
    Matrix residuals;
    /// E'E / T
    Matrix residual_cov;
    int nobs = 0;
    double loglik = 0.0;
};

/// Fits on observations p..n-1 of an aligned dataset.
VarFit fit_var(const Dataset& ds, int p);

/// Fits VAR(p) on observations first..n-1 (first >= p), so that several
/// orders can share a common estimation sample.
VarFit fit_var_on_sample(const Dataset& ds, int p, int first);

struct LagRow {
    int lag = 0;
    /// Empty at lag 0.
    std::optional<double> lr;
    double fpe = 0.0;
    double aic = 0.0;
    double sc = 0.0;
    double hq = 0.0;
    double loglik = 0.0;
};

struct LagSelectionTable {
    std::vector<LagRow> rows;
    int variables = 0;
    int nobs = 0;
    int lr_lag = 0;
    int fpe_lag = 0;
    int aic_lag = 0;
    int sc_lag = 0;
    int hq_lag = 0;
};

/// Criteria for p = 0..max_p on the common sample of n - max_p observations:
///   AIC = -2l/T + 2n/T,  SC = -2l/T + n ln T / T,  HQ = -2l/T + 2n ln ln T / T,
///   FPE = ((T + kp + 1) / (T - kp - 1))^k |S|,
///   LR_p = (T - m)(ln|S_{p-1}| - ln|S_p|), m = kp + 1, against chi2(k^2),
/// with l the Gaussian log-likelihood, S the ML residual covariance and n = k(kp + 1).
LagSelectionTable lag_order_table(const Dataset& ds, int max_p = 3);

/// Applies the starring rule to precomputed rows: FPE/AIC/SC/HQ take their
/// minimising lag; LR takes the largest lag whose test rejects at the given level.
void star_lags(LagSelectionTable& table, int variables, double level = 0.05);

}  // namespace tsecon
