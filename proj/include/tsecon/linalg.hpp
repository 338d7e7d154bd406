#pragma once

#include <Eigen/Dense>

namespace tsecon {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Ordinary least squares estimates for y = X b + e.
struct RegressionFit {
    Vector coefficients;
    Vector stderr_;
    Vector t_stats;
    Vector residuals;
    /// sigma2 * (X'X)^-1
    Matrix covariance;
    /// RSS / (nobs - nparams)
    double sigma2 = 0.0;
    double rss = 0.0;
    /// Gaussian log-likelihood with the ML variance RSS / nobs.
    double loglik = 0.0;
    double r_squared = 0.0;
    int nobs = 0;
    int nparams = 0;

    Vector fitted(const Eigen::Ref<const Vector>& y) const { return y - residuals; }
};

/// Least squares by column-pivoted Householder QR.
/// Throws DegreesOfFreedomError when n <= p and SingularDesignError when X is rank deficient.
RegressionFit ols_fit(const Eigen::Ref<const Matrix>& X, const Eigen::Ref<const Vector>& y);

struct GeneralizedEigen {
    /// Descending.
    Vector eigenvalues;
    /// Column i pairs with eigenvalues[i]; columns are B-orthonormal.
    Matrix eigenvectors;
};

/// Solves A v = mu B v for symmetric A and symmetric positive-definite B.
/// Inputs may be asymmetric by at most 1e-9 (relative); more is an AsymmetricInputError.
GeneralizedEigen generalized_eigen(const Eigen::Ref<const Matrix>& A, const Eigen::Ref<const Matrix>& B);

/// Natural log of det(S) for symmetric positive-definite S.
double log_det_spd(const Eigen::Ref<const Matrix>& S);

}  // namespace tsecon
