#include "tsecon/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/distributions/fisher_f.hpp>

#include "tsecon/distributions.hpp"
#include "tsecon/errors.hpp"

namespace tsecon {

JarqueBera jb_from_moments(double skewness, double kurtosis, int n) {
    if (n < 8) throw SampleTooSmallError("Jarque-Bera needs at least 8 observations");
    const double excess = kurtosis - 3.0;
    JarqueBera out;
    out.statistic = n * (skewness * skewness / 6.0 + excess * excess / 24.0);
    out.p_value = chi_square_sf(out.statistic, 2);
    return out;
}

NormalityReport jarque_bera(std::span<const double> x) {
    const auto n = static_cast<int>(x.size());
    if (n < 8) throw SampleTooSmallError("Jarque-Bera needs at least 8 observations");

    NormalityReport r;
    r.nobs = n;
    double sum = 0.0;
    r.min = x[0];
    r.max = x[0];
    for (double v : x) {
        sum += v;
        r.min = std::min(r.min, v);
        r.max = std::max(r.max, v);
    }
    r.mean = sum / n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - r.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    const double scale = std::max(std::abs(r.max), std::abs(r.min));
    if (m2 <= 1e-28 * std::max(1.0, scale * scale)) throw ZeroVarianceError("sample has zero variance");

    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    const auto half = static_cast<std::size_t>(n / 2);
    r.median = n % 2 == 1 ? sorted[half] : 0.5 * (sorted[half - 1] + sorted[half]);

    r.std_dev = std::sqrt(m2 * n / (n - 1));
    r.skewness = m3 / std::pow(m2, 1.5);
    r.kurtosis = m4 / (m2 * m2);
    const auto jb = jb_from_moments(r.skewness, r.kurtosis, n);
    r.jarque_bera = jb.statistic;
    r.p_value = jb.p_value;
    return r;
}

BreuschGodfrey breusch_godfrey(const Eigen::Ref<const Matrix>& design, const Eigen::Ref<const Vector>& residuals,
                               int lags) {
    const auto n = residuals.size();
    const auto p = design.cols();
    if (lags < 1) throw ConfigError("Breusch-Godfrey needs at least one lag");
    if (design.rows() != n) throw DataError("design and residual lengths differ");
    if (n <= p + lags) {
        throw DegreesOfFreedomError("Breusch-Godfrey auxiliary regression has " + std::to_string(n) +
                                    " observations for " + std::to_string(p + lags) + " regressors");
    }
    const double scale = std::max(1.0, residuals.cwiseAbs().maxCoeff());
    if (residuals.squaredNorm() <= 1e-28 * scale * scale * static_cast<double>(n)) {
        throw ZeroVarianceError("residuals are identically zero");
    }

    Matrix aux(n, p + lags);
    aux.leftCols(p) = design;
    for (int h = 1; h <= lags; ++h) {
        for (Eigen::Index t = 0; t < n; ++t) aux(t, p + h - 1) = t >= h ? residuals[t - h] : 0.0;
    }
    const auto fit = ols_fit(aux, residuals);

    // Uncentered R^2 keeps the statistic meaningful when the design lacks a constant.
    BreuschGodfrey out;
    out.lags = lags;
    out.nobs = static_cast<int>(n);
    out.r_squared = 1.0 - fit.rss / residuals.squaredNorm();
    out.lm_stat = static_cast<double>(n) * out.r_squared;
    out.lm_p_value = chi_square_sf(std::max(out.lm_stat, 0.0), lags);
    const double df2 = static_cast<double>(n - p - lags);
    out.f_stat = (out.r_squared / lags) / ((1.0 - out.r_squared) / df2);
    if (std::isfinite(out.f_stat) && out.f_stat >= 0.0) {
        boost::math::fisher_f dist(lags, df2);
        out.f_p_value = boost::math::cdf(boost::math::complement(dist, out.f_stat));
    } else {
        out.f_p_value = 0.0;
    }
    return out;
}

}  // namespace tsecon
