#pragma once

#include <span>

#include "tsecon/linalg.hpp"

namespace tsecon {

struct NormalityReport {
    double mean = 0.0;
    double median = 0.0;
    double max = 0.0;
    double min = 0.0;
    /// Sample standard deviation (n - 1 divisor).
    double std_dev = 0.0;
    double skewness = 0.0;
    /// Raw fourth-moment ratio m4 / m2^2 (3 for a normal law).
    double kurtosis = 0.0;
    double jarque_bera = 0.0;
    double p_value = 1.0;
    int nobs = 0;
};

struct JarqueBera {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// n [S^2 / 6 + (K - 3)^2 / 24] against chi2(2).
JarqueBera jb_from_moments(double skewness, double kurtosis, int n);

NormalityReport jarque_bera(std::span<const double> x);

struct BreuschGodfrey {
    /// n R^2 of the auxiliary regression.
    double lm_stat = 0.0;
    double lm_p_value = 1.0;
    double f_stat = 0.0;
    double f_p_value = 1.0;
    double r_squared = 0.0;
    int lags = 0;
    int nobs = 0;
};

/// Auxiliary regression of the residuals on the original design and h lagged
/// residuals (pre-sample lags set to zero). LM is compared with chi2(h), F with F(h, n - p - h).
BreuschGodfrey breusch_godfrey(const Eigen::Ref<const Matrix>& design, const Eigen::Ref<const Vector>& residuals,
                               int lags);

}  // namespace tsecon
