#include "tsecon/johansen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "design.hpp"
#include "tsecon/distributions.hpp"
#include "tsecon/errors.hpp"

namespace tsecon {

std::string_view to_string(JohansenCase c) {
    switch (c) {
        case JohansenCase::restricted_constant: return "restricted_constant";
        case JohansenCase::unrestricted_constant: return "unrestricted_constant";
        case JohansenCase::restricted_trend: return "restricted_trend";
    }
    return "?";
}

JohansenCase johansen_case_from_string(std::string_view s) {
    if (s == "2" || s == "restricted_constant") return JohansenCase::restricted_constant;
    if (s == "3" || s == "unrestricted_constant") return JohansenCase::unrestricted_constant;
    if (s == "4" || s == "restricted_trend") return JohansenCase::restricted_trend;
    throw ConfigError("unknown Johansen deterministic case '" + std::string(s) + "'");
}

std::string_view to_string(RankStatistic s) {
    return s == RankStatistic::trace ? "trace" : "max_eigen";
}

namespace detail {

EcmDesign build_ecm_design(const Dataset& ds, int k_var, JohansenCase det_case) {
    if (k_var < 1) throw ConfigError("VAR lag order in levels must be at least 1");
    const Matrix Y = ds.to_matrix();
    const int n = static_cast<int>(Y.rows());
    const int k = static_cast<int>(Y.cols());
    const int T = n - k_var;
    if (k < 1) throw ConfigError("cointegration analysis needs at least one variable");

    EcmDesign d;
    d.lag_diffs = k_var - 1;
    d.free_intercept = det_case != JohansenCase::restricted_constant;
    const int restricted = det_case == JohansenCase::unrestricted_constant ? 0 : 1;
    const int q = (d.free_intercept ? 1 : 0) + k * d.lag_diffs;
    if (T <= q + k + restricted) {
        throw DegreesOfFreedomError("error-correction regression has " + std::to_string(T) +
                                    " observations for " + std::to_string(q + k + restricted) + " regressors");
    }

    d.dY.resize(T, k);
    d.level.resize(T, k + restricted);
    d.short_run.resize(T, q);
    for (int r = 0; r < T; ++r) {
        const int t = k_var + r;
        d.dY.row(r) = Y.row(t) - Y.row(t - 1);
        d.level.row(r).head(k) = Y.row(t - 1);
        if (det_case == JohansenCase::restricted_constant) d.level(r, k) = 1.0;
        if (det_case == JohansenCase::restricted_trend) d.level(r, k) = static_cast<double>(t);
        int c = 0;
        if (d.free_intercept) d.short_run(r, c++) = 1.0;
        for (int j = 1; j <= d.lag_diffs; ++j) {
            d.short_run.row(r).segment(c, k) = Y.row(t - j) - Y.row(t - j - 1);
            c += k;
        }
    }
    return d;
}

}  // namespace detail

namespace {

Matrix partial_out(const Matrix& target, const Matrix& regressors) {
    if (regressors.cols() == 0) return target;
    Eigen::ColPivHouseholderQR<Matrix> qr(regressors);
    qr.setThreshold(1e-10);
    if (qr.rank() < regressors.cols()) throw SingularDesignError("short-run regressors are collinear");
    return target - regressors * qr.solve(target);
}

void normalize_columns(Matrix& V) {
    for (Eigen::Index j = 0; j < V.cols(); ++j) {
        const double tol = 1e-10 * V.col(j).cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < V.rows(); ++i) {
            if (std::abs(V(i, j)) > tol) {
                V.col(j) /= V(i, j);
                break;
            }
        }
    }
}

// Asymptotic critical values, rows k - r = 1..6, columns 10%, 5%, 1%.
// The unrestricted-constant table and the 5% columns of the restricted cases
// are MacKinnon-Haug-Michelis (1999); the 10% and 1% columns of the restricted
// cases come from tools/tsecon simulate-johansen (T = 1000, 100k replications).
using CvTable = std::array<std::array<double, 3>, 6>;

constexpr CvTable kTraceCase3{{
    {2.705545, 3.841466, 6.634897},
    {13.42878, 15.49471, 19.93711},
    {27.06695, 29.79707, 35.45817},
    {44.49359, 47.85613, 54.68150},
    {65.81970, 69.81889, 77.81884},
    {91.10960, 95.75366, 104.9615},
}};
constexpr CvTable kMaxCase3{{
    {2.705545, 3.841466, 6.634897},
    {12.29652, 14.26460, 18.52001},
    {18.89282, 21.13162, 25.86121},
    {25.12408, 27.58434, 32.71527},
    {31.23922, 33.87687, 39.37049},
    {37.27942, 40.07757, 45.86900},
}};
constexpr CvTable kTraceCase2{{
    {7.567, 9.164546, 12.834},
    {17.999, 20.26184, 25.241},
    {32.350, 35.19275, 41.404},
    {50.617, 54.07904, 61.428},
    {73.028, 76.97277, 85.548},
    {99.431, 103.8473, 113.776},
}};
constexpr CvTable kMaxCase2{{
    {7.567, 9.164546, 12.834},
    {13.904, 15.89210, 20.261},
    {20.100, 22.29962, 27.108},
    {26.147, 28.58808, 33.619},
    {32.214, 34.80587, 40.404},
    {38.340, 40.95680, 46.886},
}};
constexpr CvTable kTraceCase4{{
    {10.715, 12.32090, 16.605},
    {23.411, 25.87211, 31.210},
    {39.768, 42.91525, 49.430},
    {60.223, 63.87610, 71.632},
    {84.585, 88.80380, 97.873},
    {113.042, 117.7082, 128.399},
}};
constexpr CvTable kMaxCase4{{
    {10.715, 12.32090, 16.605},
    {17.315, 19.38704, 24.003},
    {23.444, 25.82321, 30.945},
    {29.559, 32.11832, 37.434},
    {35.679, 38.33101, 44.190},
    {41.776, 44.49720, 50.568},
}};

const CvTable& cv_table(RankStatistic kind, JohansenCase det_case) {
    const bool trace = kind == RankStatistic::trace;
    switch (det_case) {
        case JohansenCase::restricted_constant: return trace ? kTraceCase2 : kMaxCase2;
        case JohansenCase::unrestricted_constant: return trace ? kTraceCase3 : kMaxCase3;
        case JohansenCase::restricted_trend: return trace ? kTraceCase4 : kMaxCase4;
    }
    throw TableRangeError("unsupported deterministic case");
}

std::size_t level_column(Level level) {
    switch (level) {
        case Level::pct10: return 0;
        case Level::pct5: return 1;
        case Level::pct1: return 2;
    }
    return 1;
}

void require_eigenvalues(std::span<const double> mu, int nobs, int r) {
    if (nobs < 1) throw ConfigError("effective sample size must be positive");
    if (r < 0 || r >= static_cast<int>(mu.size())) {
        throw ConfigError("rank " + std::to_string(r) + " outside 0.." + std::to_string(mu.size() - 1));
    }
    for (double m : mu) {
        if (!(m >= 0.0 && m < 1.0)) {
            throw EigenvalueDomainError("eigenvalue " + std::to_string(m) + " outside [0, 1)");
        }
    }
}

}  // namespace

Matrix JohansenEigen::alpha(int r) const {
    const Matrix b = beta(r);
    const Matrix middle = b.transpose() * S11 * b;
    return S01 * b * middle.ldlt().solve(Matrix::Identity(r, r));
}

JohansenEigen johansen_eigen(const Dataset& ds, int k_var, JohansenCase det_case) {
    const auto d = detail::build_ecm_design(ds, k_var, det_case);
    const Matrix R0 = partial_out(d.dY, d.short_run);
    const Matrix R1 = partial_out(d.level, d.short_run);
    const double T = static_cast<double>(R0.rows());

    JohansenEigen out;
    out.nobs = static_cast<int>(R0.rows());
    out.variables = static_cast<int>(d.dY.cols());
    out.k_var = k_var;
    out.det_case = det_case;
    out.S00 = R0.transpose() * R0 / T;
    out.S01 = R0.transpose() * R1 / T;
    out.S11 = R1.transpose() * R1 / T;

    Eigen::LLT<Matrix> s00(out.S00);
    if (s00.info() != Eigen::Success || s00.matrixL().toDenseMatrix().diagonal().minCoeff() <= 0.0) {
        throw SingularMomentError("S00 is singular");
    }
    Matrix A = out.S01.transpose() * s00.solve(out.S01);
    A = 0.5 * (A + A.transpose());

    GeneralizedEigen ge;
    try {
        ge = generalized_eigen(A, out.S11);
    } catch (const NotPDError&) {
        throw SingularMomentError("S11 is singular");
    }

    const int k = out.variables;
    out.eigenvalues = ge.eigenvalues.head(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (out.eigenvalues[i] < 0.0) out.eigenvalues[i] = 0.0;
        if (out.eigenvalues[i] >= 1.0 - 1e-12) throw SingularMomentError("levels explain differences exactly");
    }
    out.eigenvectors = ge.eigenvectors.leftCols(k);
    normalize_columns(out.eigenvectors);
    return out;
}

double trace_statistic(std::span<const double> eigenvalues, int nobs, int r) {
    require_eigenvalues(eigenvalues, nobs, r);
    double acc = 0.0;
    for (std::size_t i = static_cast<std::size_t>(r); i < eigenvalues.size(); ++i) acc += std::log1p(-eigenvalues[i]);
    return -static_cast<double>(nobs) * acc;
}

double max_eigen_statistic(std::span<const double> eigenvalues, int nobs, int r) {
    require_eigenvalues(eigenvalues, nobs, r);
    return -static_cast<double>(nobs) * std::log1p(-eigenvalues[static_cast<std::size_t>(r)]);
}

double johansen_critical_value(RankStatistic kind, int k_minus_r, JohansenCase det_case, Level level) {
    if (k_minus_r < 1 || k_minus_r > 6) {
        throw TableRangeError("critical values tabulated for 1 <= k - r <= 6, got " + std::to_string(k_minus_r));
    }
    return cv_table(kind, det_case)[static_cast<std::size_t>(k_minus_r - 1)][level_column(level)];
}

double johansen_p_value(RankStatistic kind, double statistic, int k_minus_r, JohansenCase det_case) {
    if (det_case == JohansenCase::unrestricted_constant && k_minus_r == 1) {
        return chi_square_sf(std::max(statistic, 0.0), 1);
    }
    const double c10 = johansen_critical_value(kind, k_minus_r, det_case, Level::pct10);
    const double c5 = johansen_critical_value(kind, k_minus_r, det_case, Level::pct5);
    const double c1 = johansen_critical_value(kind, k_minus_r, det_case, Level::pct1);
    double log_p;
    if (statistic >= c5) {
        log_p = std::log(0.05) + (statistic - c5) * (std::log(0.01) - std::log(0.05)) / (c1 - c5);
    } else {
        log_p = std::log(0.05) + (statistic - c5) * (std::log(0.10) - std::log(0.05)) / (c10 - c5);
    }
    return std::clamp(std::exp(log_p), 0.0, 1.0);
}

int decide_rank(std::span<const double> statistics, std::span<const double> critical_values) {
    if (statistics.size() != critical_values.size()) throw ConfigError("statistics and critical values differ in length");
    for (std::size_t r = 0; r < statistics.size(); ++r) {
        if (statistics[r] <= critical_values[r]) return static_cast<int>(r);
    }
    return static_cast<int>(statistics.size());
}

JohansenResult johansen_test(const Dataset& ds, int k_var, JohansenCase det_case, Level level) {
    const auto eig = johansen_eigen(ds, k_var, det_case);
    const int k = eig.variables;
    if (k > 6) throw TableRangeError("critical values are tabulated for at most 6 variables");

    JohansenResult res;
    res.det_case = det_case;
    res.k_var = k_var;
    res.nobs = eig.nobs;
    res.level = level;
    res.eigenvalues = eig.eigenvalues;
    const std::span<const double> mu(eig.eigenvalues.data(), static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) {
        const double tr = trace_statistic(mu, eig.nobs, r);
        const double mx = max_eigen_statistic(mu, eig.nobs, r);
        res.trace_stats.push_back(tr);
        res.max_eig_stats.push_back(mx);
        res.trace_critical.push_back(johansen_critical_value(RankStatistic::trace, k - r, det_case, level));
        res.max_eig_critical.push_back(johansen_critical_value(RankStatistic::max_eigen, k - r, det_case, level));
        res.trace_p.push_back(johansen_p_value(RankStatistic::trace, tr, k - r, det_case));
        res.max_eig_p.push_back(johansen_p_value(RankStatistic::max_eigen, mx, k - r, det_case));
    }
    res.trace_rank = decide_rank(res.trace_stats, res.trace_critical);
    res.max_eig_rank = decide_rank(res.max_eig_stats, res.max_eig_critical);
    res.decided_rank = res.trace_rank;
    res.beta = eig.beta(res.decided_rank);
    res.alpha = res.decided_rank > 0 ? eig.alpha(res.decided_rank) : Matrix(k, 0);
    return res;
}

}  // namespace tsecon
