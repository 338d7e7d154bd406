#include "tsecon/var_select.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tsecon/distributions.hpp"
#include "tsecon/errors.hpp"

namespace tsecon {

VarFit fit_var(const Dataset& ds, int p) {
    return fit_var_on_sample(ds, p, p);
}

VarFit fit_var_on_sample(const Dataset& ds, int p, int first) {
    if (p < 0) throw ConfigError("VAR lag order must be non-negative");
    if (first < p) throw ConfigError("VAR sample must start at or after the lag order");
    const Matrix Y = ds.to_matrix();
    const int n = static_cast<int>(Y.rows());
    const int k = static_cast<int>(Y.cols());
    const int T = n - first;
    if (k == 0) throw ConfigError("VAR needs at least one variable");
    if (T <= k * p + 1) {
        throw DegreesOfFreedomError("VAR(" + std::to_string(p) + ") with " + std::to_string(k) +
                                    " variables has " + std::to_string(T) + " observations for " +
                                    std::to_string(k * p + 1) + " regressors per equation");
    }

    Matrix X(T, 1 + k * p);
    for (int r = 0; r < T; ++r) {
        const int t = first + r;
        X(r, 0) = 1.0;
        for (int j = 1; j <= p; ++j) X.row(r).segment(1 + (j - 1) * k, k) = Y.row(t - j);
    }

    VarFit fit;
    fit.lag_order = p;
    fit.nobs = T;
    fit.intercept.resize(k);
    fit.lag_coefficients.assign(static_cast<std::size_t>(p), Matrix(k, k));
    fit.residuals.resize(T, k);
    for (int i = 0; i < k; ++i) {
        const auto eq = ols_fit(X, Y.col(i).tail(T));
        fit.intercept[i] = eq.coefficients[0];
        for (int j = 0; j < p; ++j) {
            fit.lag_coefficients[static_cast<std::size_t>(j)].row(i) = eq.coefficients.segment(1 + j * k, k).transpose();
        }
        fit.residuals.col(i) = eq.residuals;
    }
    fit.residual_cov = fit.residuals.transpose() * fit.residuals / static_cast<double>(T);
    const double log_det = log_det_spd(fit.residual_cov);
    fit.loglik = -0.5 * T * (k * (1.0 + std::log(2.0 * std::numbers::pi)) + log_det);
    return fit;
}

void star_lags(LagSelectionTable& table, int variables, double level) {
    if (table.rows.empty()) return;
    auto argmin = [&](auto member) {
        int best = table.rows.front().lag;
        double value = table.rows.front().*member;
        for (const auto& row : table.rows) {
            if (row.*member < value) {
                value = row.*member;
                best = row.lag;
            }
        }
        return best;
    };
    table.fpe_lag = argmin(&LagRow::fpe);
    table.aic_lag = argmin(&LagRow::aic);
    table.sc_lag = argmin(&LagRow::sc);
    table.hq_lag = argmin(&LagRow::hq);
    table.lr_lag = 0;
    for (const auto& row : table.rows) {
        if (row.lr && chi_square_sf(std::max(*row.lr, 0.0), variables * variables) < level) {
            table.lr_lag = std::max(table.lr_lag, row.lag);
        }
    }
}

LagSelectionTable lag_order_table(const Dataset& ds, int max_p) {
    if (max_p < 1) throw ConfigError("maximum lag must be at least 1");
    const int k = static_cast<int>(ds.width());
    LagSelectionTable table;
    table.variables = k;

    double prev_log_det = 0.0;
    for (int p = 0; p <= max_p; ++p) {
        const auto fit = fit_var_on_sample(ds, p, max_p);
        const double T = fit.nobs;
        const double log_det = log_det_spd(fit.residual_cov);
        const double nparams = static_cast<double>(k) * (k * p + 1);
        const double base = -2.0 * fit.loglik / T;

        LagRow row;
        row.lag = p;
        row.loglik = fit.loglik;
        row.aic = base + 2.0 * nparams / T;
        row.sc = base + nparams * std::log(T) / T;
        row.hq = base + 2.0 * nparams * std::log(std::log(T)) / T;
        const double m = k * p + 1;
        row.fpe = std::pow((T + m) / (T - m), k) * std::exp(log_det);
        if (p > 0) row.lr = (T - m) * (prev_log_det - log_det);
        prev_log_det = log_det;
        table.nobs = fit.nobs;
        table.rows.push_back(row);
    }
    star_lags(table, k);
    return table;
}

}  // namespace tsecon
