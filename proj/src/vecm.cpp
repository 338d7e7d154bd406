#include "tsecon/vecm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "design.hpp"
#include "tsecon/distributions.hpp"
#include "tsecon/errors.hpp"

namespace tsecon {

int VecmFit::short_run_column(int lag, int source) const {
    if (lag < 1 || lag > lag_diffs || source < 0 || source >= variables()) {
        throw ConfigError("no short-run coefficient for lag " + std::to_string(lag) + " of variable " +
                          std::to_string(source));
    }
    return (free_intercept ? 1 : 0) + (lag - 1) * variables() + source;
}

int VecmFit::ect_column(int relation) const {
    if (relation < 0 || relation >= rank) throw ConfigError("no cointegrating relation " + std::to_string(relation));
    return (free_intercept ? 1 : 0) + lag_diffs * variables() + relation;
}

int VecmFit::equation_index(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ConfigError("no equation named '" + name + "'");
    return static_cast<int>(it - names.begin());
}

VecmFit fit_vecm(const Dataset& ds, int rank, int k_var, JohansenCase det_case) {
    if (rank < 1) throw NoCointegrationError("a VECM needs cointegrating rank >= 1");
    if (rank > static_cast<int>(ds.width())) throw ConfigError("rank exceeds the number of variables");
    const auto eig = johansen_eigen(ds, k_var, det_case);
    return fit_vecm_with_beta(ds, eig.beta(rank), k_var, det_case);
}

VecmFit fit_vecm_with_beta(const Dataset& ds, const Matrix& beta, int k_var, JohansenCase det_case) {
    const auto rank = static_cast<int>(beta.cols());
    if (rank < 1) throw NoCointegrationError("a VECM needs cointegrating rank >= 1");
    const auto d = detail::build_ecm_design(ds, k_var, det_case);
    if (beta.rows() != d.level.cols()) {
        throw ConfigError("cointegrating vectors have " + std::to_string(beta.rows()) + " rows, expected " +
                          std::to_string(d.level.cols()));
    }

    VecmFit fit;
    fit.rank = rank;
    fit.lag_diffs = d.lag_diffs;
    fit.det_case = det_case;
    fit.names = ds.names();
    fit.free_intercept = d.free_intercept;
    fit.nobs = static_cast<int>(d.dY.rows());
    fit.first_year = ds.sample().first_year + k_var;
    fit.beta = beta;
    fit.ect = d.level * beta;
    fit.dY = d.dY;
    fit.design.resize(fit.nobs, d.short_run.cols() + rank);
    fit.design << d.short_run, fit.ect;
    fit.residuals.resize(fit.nobs, fit.variables());

    const int k = fit.variables();
    for (int i = 0; i < k; ++i) {
        VecmEquation eq;
        eq.name = fit.names[static_cast<std::size_t>(i)];
        eq.fit = ols_fit(fit.design, d.dY.col(i));
        eq.intercept = fit.free_intercept ? eq.fit.coefficients[0] : std::numeric_limits<double>::quiet_NaN();
        eq.ect_coeffs.resize(rank);
        eq.ect_tstats.resize(rank);
        for (int h = 0; h < rank; ++h) {
            eq.ect_coeffs[h] = eq.fit.coefficients[fit.ect_column(h)];
            eq.ect_tstats[h] = eq.fit.t_stats[fit.ect_column(h)];
        }
        eq.short_run.resize(fit.lag_diffs, k);
        eq.short_run_stderr.resize(fit.lag_diffs, k);
        for (int j = 1; j <= fit.lag_diffs; ++j) {
            for (int m = 0; m < k; ++m) {
                eq.short_run(j - 1, m) = eq.fit.coefficients[fit.short_run_column(j, m)];
                eq.short_run_stderr(j - 1, m) = eq.fit.stderr_[fit.short_run_column(j, m)];
            }
        }
        fit.residuals.col(i) = eq.fit.residuals;
        fit.equations.push_back(std::move(eq));
    }
    return fit;
}

LongRunCausality long_run_causality(double lambda, double tstat) {
    constexpr double kCritical = 1.96;
    return {lambda < 0.0 && std::abs(tstat) > kCritical, lambda, tstat};
}

LongRunCausality long_run_causality(const VecmFit& fit, int equation, int relation) {
    if (equation < 0 || equation >= fit.variables()) throw ConfigError("no equation " + std::to_string(equation));
    if (relation < 0 || relation >= fit.rank) throw ConfigError("no cointegrating relation " + std::to_string(relation));
    const auto& eq = fit.equations[static_cast<std::size_t>(equation)];
    return long_run_causality(eq.ect_coeffs[relation], eq.ect_tstats[relation]);
}

double wald_statistic(const Vector& coefficients, const Matrix& covariance, std::span<const int> indices) {
    const auto q = static_cast<Eigen::Index>(indices.size());
    Vector rb(q);
    Matrix rvr(q, q);
    for (Eigen::Index a = 0; a < q; ++a) {
        rb[a] = coefficients[indices[static_cast<std::size_t>(a)]];
        for (Eigen::Index b = 0; b < q; ++b) {
            rvr(a, b) = covariance(indices[static_cast<std::size_t>(a)], indices[static_cast<std::size_t>(b)]);
        }
    }
    Eigen::LLT<Matrix> llt(rvr);
    if (llt.info() != Eigen::Success) throw NotPDError("restricted covariance is not positive definite");
    return std::max(0.0, rb.dot(llt.solve(rb)));
}

WaldResult wald_block(const VecmFit& fit, int target, std::span<const int> sources) {
    if (target < 0 || target >= fit.variables()) throw ConfigError("no equation " + std::to_string(target));
    if (fit.lag_diffs == 0) {
        throw NothingToTestError("the VECM has no lagged differences, so there are no short-run restrictions");
    }
    if (sources.empty()) throw NothingToTestError("no source variables to exclude");

    WaldResult out;
    out.target_equation = fit.names[static_cast<std::size_t>(target)];
    std::vector<int> idx;
    for (int s : sources) {
        if (s < 0 || s >= fit.variables()) throw ConfigError("no variable " + std::to_string(s));
        out.excluded_block.push_back(fit.names[static_cast<std::size_t>(s)]);
        for (int j = 1; j <= fit.lag_diffs; ++j) idx.push_back(fit.short_run_column(j, s));
    }
    const auto& eq = fit.equations[static_cast<std::size_t>(target)];
    out.chi_square = wald_statistic(eq.fit.coefficients, eq.fit.covariance, idx);
    out.df = static_cast<int>(idx.size());
    out.p_value = chi_square_sf(out.chi_square, out.df);
    return out;
}

WaldResult wald_short_run(const VecmFit& fit, int target, int source) {
    const int sources[] = {source};
    return wald_block(fit, target, sources);
}

WaldResult wald_short_run(const VecmFit& fit, const std::string& target, const std::string& source) {
    return wald_short_run(fit, fit.equation_index(target), fit.equation_index(source));
}

std::vector<CausalityEntry> causality_matrix(const VecmFit& fit, double level) {
    const int k = fit.variables();
    std::vector<CausalityEntry> out;
    for (int target = 0; target < k; ++target) {
        for (int source = 0; source < k; ++source) {
            if (source == target) continue;
            CausalityEntry e;
            e.source = fit.names[static_cast<std::size_t>(source)];
            e.target = fit.names[static_cast<std::size_t>(target)];
            e.wald = wald_short_run(fit, target, source);
            e.significant = e.wald.p_value < level;
            out.push_back(std::move(e));
        }
    }
    for (auto& e : out) {
        auto reverse = std::find_if(out.begin(), out.end(), [&](const CausalityEntry& o) {
            return o.source == e.target && o.target == e.source;
        });
        e.bidirectional = e.significant && reverse != out.end() && reverse->significant;
    }
    return out;
}

}  // namespace tsecon
