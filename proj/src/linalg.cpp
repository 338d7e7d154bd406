#include "tsecon/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "tsecon/errors.hpp"

namespace tsecon {

namespace {

constexpr double kSymmetryTolerance = 1e-9;

void require_symmetric(const Eigen::Ref<const Matrix>& M, const char* name) {
    if (M.rows() != M.cols()) throw AsymmetricInputError(std::string(name) + " is not square");
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSymmetryTolerance * scale) {
        throw AsymmetricInputError(std::string(name) + " is not symmetric (max asymmetry " +
                                   std::to_string(asym) + ")");
    }
}

}  // namespace

RegressionFit ols_fit(const Eigen::Ref<const Matrix>& X, const Eigen::Ref<const Vector>& y) {
    const auto n = X.rows();
    const auto p = X.cols();
    if (y.size() != n) throw DataError("design and response lengths differ");
    if (n <= p) {
        throw DegreesOfFreedomError("OLS needs more observations (" + std::to_string(n) +
                                    ") than regressors (" + std::to_string(p) + ")");
    }
    if (!X.allFinite() || !y.allFinite()) throw DataError("non-finite regression input");

    Eigen::ColPivHouseholderQR<Matrix> qr(X);
    qr.setThreshold(1e-10);
    if (qr.rank() < p) {
        throw SingularDesignError("design matrix has rank " + std::to_string(qr.rank()) + " < " +
                                  std::to_string(p));
    }

    RegressionFit fit;
    fit.nobs = static_cast<int>(n);
    fit.nparams = static_cast<int>(p);
    fit.coefficients = qr.solve(y);
    fit.residuals = y - X * fit.coefficients;
    fit.rss = fit.residuals.squaredNorm();
    fit.sigma2 = fit.rss / static_cast<double>(n - p);

    // (X'X)^-1 = P (R'R)^-1 P'
    const Matrix R = qr.matrixR().topLeftCorner(p, p).template triangularView<Eigen::Upper>();
    const Matrix Rinv = R.template triangularView<Eigen::Upper>().solve(Matrix::Identity(p, p));
    const Matrix unpermuted = Rinv * Rinv.transpose();
    const auto& perm = qr.colsPermutation();
    fit.covariance = fit.sigma2 * (perm * unpermuted * perm.transpose());

    fit.stderr_ = fit.covariance.diagonal().cwiseMax(0.0).cwiseSqrt();
    fit.t_stats = Vector::Zero(p);
    for (Eigen::Index i = 0; i < p; ++i) {
        if (fit.stderr_[i] > 0.0) fit.t_stats[i] = fit.coefficients[i] / fit.stderr_[i];
    }

    const double nd = static_cast<double>(n);
    fit.loglik = -0.5 * nd * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(fit.rss / nd));
    const double tss = (y.array() - y.mean()).matrix().squaredNorm();
    fit.r_squared = tss > 0.0 ? 1.0 - fit.rss / tss : 0.0;
    return fit;
}

GeneralizedEigen generalized_eigen(const Eigen::Ref<const Matrix>& A, const Eigen::Ref<const Matrix>& B) {
    require_symmetric(A, "A");
    require_symmetric(B, "B");
    if (A.rows() != B.rows()) throw AsymmetricInputError("A and B differ in size");
    const auto k = A.rows();

    const Matrix As = 0.5 * (A + A.transpose());
    const Matrix Bs = 0.5 * (B + B.transpose());
    Eigen::LLT<Matrix> llt(Bs);
    if (llt.info() != Eigen::Success) throw NotPDError("B is not positive definite");
    const Matrix L = llt.matrixL();
    if (L.diagonal().minCoeff() <= 0.0) throw NotPDError("B is not positive definite");

    // C = L^-1 A L^-T, symmetric with the same spectrum as the pencil.
    const Matrix Linv_A = L.triangularView<Eigen::Lower>().solve(As);
    Matrix C = L.triangularView<Eigen::Lower>().solve(Linv_A.transpose());
    C = 0.5 * (C + C.transpose());

    Eigen::SelfAdjointEigenSolver<Matrix> es(C);
    if (es.info() != Eigen::Success) throw NumericalError("symmetric eigensolver did not converge");

    std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return es.eigenvalues()[a] > es.eigenvalues()[b];
    });

    GeneralizedEigen out;
    out.eigenvalues.resize(k);
    Matrix U(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        out.eigenvalues[i] = es.eigenvalues()[order[static_cast<std::size_t>(i)]];
        U.col(i) = es.eigenvectors().col(order[static_cast<std::size_t>(i)]);
    }
    // v = L^-T u
    out.eigenvectors = L.transpose().triangularView<Eigen::Upper>().solve(U);
    return out;
}

double log_det_spd(const Eigen::Ref<const Matrix>& S) {
    Eigen::LLT<Matrix> llt(0.5 * (S + S.transpose()));
    if (llt.info() != Eigen::Success) throw NotPDError("matrix is not positive definite");
    const Matrix L = llt.matrixL();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
        if (L(i, i) <= 0.0) throw NotPDError("matrix is not positive definite");
        acc += std::log(L(i, i));
    }
    return 2.0 * acc;
}

}  // namespace tsecon
