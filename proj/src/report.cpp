#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "tsecon/pipeline.hpp"

namespace tsecon {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(num(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(num(v[i]));
    return out;
}

json vector_json(const std::vector<double>& v) {
    json out = json::array();
    for (double x : v) out.push_back(num(x));
    return out;
}

const char* level_key(Level l) {
    switch (l) {
        case Level::pct1: return "1%";
        case Level::pct5: return "5%";
        case Level::pct10: return "10%";
    }
    return "?";
}

json adf_json(const AdfResult& r) {
    json cv = json::object();
    for (const auto& [level, value] : r.critical_values) cv[level_key(level)] = num(value);
    return {{"statistic", num(r.statistic)},
            {"det_case", std::string(to_string(r.det_case))},
            {"lags_used", r.lags_used},
            {"nobs", r.nobs},
            {"critical_values", cv},
            {"reject_at_5pct", r.reject_at_5pct}};
}

json wald_json(const WaldResult& w) {
    return {{"chi_square", num(w.chi_square)},
            {"df", w.df},
            {"p_value", num(w.p_value)},
            {"target_equation", w.target_equation},
            {"excluded_block", w.excluded_block}};
}

json johansen_json(const JohansenResult& j) {
    return {{"det_case", static_cast<int>(j.det_case)},
            {"k_var", j.k_var},
            {"nobs", j.nobs},
            {"level", level_value(j.level)},
            {"eigenvalues", vector_json(j.eigenvalues)},
            {"trace",
             {{"statistics", vector_json(j.trace_stats)},
              {"critical_values", vector_json(j.trace_critical)},
              {"p_values", vector_json(j.trace_p)},
              {"rank", j.trace_rank}}},
            {"max_eigen",
             {{"statistics", vector_json(j.max_eig_stats)},
              {"critical_values", vector_json(j.max_eig_critical)},
              {"p_values", vector_json(j.max_eig_p)},
              {"rank", j.max_eig_rank}}},
            {"decided_rank", j.decided_rank},
            {"beta", matrix_json(j.beta)},
            {"alpha", matrix_json(j.alpha)}};
}

json vecm_json(const VecmFit& f) {
    json eqs = json::array();
    for (const auto& eq : f.equations) {
        eqs.push_back({{"name", eq.name},
                       {"intercept", num(eq.intercept)},
                       {"ect_coeffs", vector_json(eq.ect_coeffs)},
                       {"ect_tstats", vector_json(eq.ect_tstats)},
                       {"short_run", matrix_json(eq.short_run)},
                       {"short_run_stderr", matrix_json(eq.short_run_stderr)},
                       {"sigma2", num(eq.fit.sigma2)},
                       {"r_squared", num(eq.fit.r_squared)},
                       {"loglik", num(eq.fit.loglik)}});
    }
    return {{"rank", f.rank},
            {"lag_diffs", f.lag_diffs},
            {"det_case", static_cast<int>(f.det_case)},
            {"nobs", f.nobs},
            {"first_year", f.first_year},
            {"beta", matrix_json(f.beta)},
            {"equations", eqs}};
}

json lag_json(const LagSelectionTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"lag", r.lag},
                        {"lr", r.lr ? num(*r.lr) : json(nullptr)},
                        {"fpe", num(r.fpe)},
                        {"aic", num(r.aic)},
                        {"sc", num(r.sc)},
                        {"hq", num(r.hq)},
                        {"loglik", num(r.loglik)}});
    }
    return {{"nobs", t.nobs},
            {"variables", t.variables},
            {"rows", rows},
            {"selected", {{"lr", t.lr_lag}, {"fpe", t.fpe_lag}, {"aic", t.aic_lag}, {"sc", t.sc_lag}, {"hq", t.hq_lag}}}};
}

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

std::string fmt6(double v) {
    if (!std::isfinite(v)) return "NA";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string out = buf;
    if (out == "-0.000000") out.erase(0, 1);
    return out;
}

std::string percent(double alpha) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g%%", alpha * 100.0);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s + " ";
    return std::string(width - s.size(), ' ') + s;
}

std::string lpad(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s + " ";
    return s + std::string(width - s.size(), ' ');
}

struct Labels {
    const char* adf_title;
    const char* variable;
    const char* form;
    const char* level;
    const char* first_diff;
    const char* constant;
    const char* constant_trend;
    const char* order;
    const char* lag_title;
    const char* lag;
    const char* johansen_title;
    const char* hypothesis;
    const char* eigenvalue;
    const char* trace_stat;
    const char* max_stat;
    const char* critical;
    const char* prob;
    const char* none;
    const char* at_most;
    const char* vecm_title;
    const char* ect;
    const char* intercept;
    const char* wald_title;
    const char* dependent;
    const char* chi_sq;
    const char* df;
    const char* diag_title;
};

constexpr Labels kEnglish{
    "Unit root tests (ADF)", "Variable", "Form", "Level", "First difference", "Constant", "Constant+trend",
    "Order", "VAR lag order selection", "Lag", "Johansen cointegration test", "Hypothesized", "Eigenvalue",
    "Trace statistic", "Max-eigen statistic", "Critical value", "Prob.", "None", "At most", "Vector error correction estimates",
    "ECT", "Constant", "Wald short-run causality", "Dependent variable", "Chi-sq", "df",
    "Residual diagnostics"};

constexpr Labels kTurkish{
    "Durağanlık Testi Sonuçları (ADF)", "Değişkenler", "Değişkenin Durumu", "Seviye", "Birinci Fark",
    "Sabit Trendsiz", "Sabit ve Trendli", "Derece", "Gecikme Uzunluğunun Belirlenmesi", "Gecikme",
    "Johansen Eşbütünlük Testi Sonuçları", "Eşbütünlük", "Özdeğer", "İz İstatistiği", "Max. Özdeğer",
    "Kritik Değer", "Olasılık Değeri", "Yoktur", "En Az", "VECM (Vektör Hata Düzeltme Modeli) Sonuçları",
    "Hata Düzeltme Terimi", "Sabit", "Wald Testi Nedensellik Sonuçları", "Bağımlı değişken", "Ki-Kare",
    "Serbestlik Derecesi", "Destekleyici İstatistik Sonuçları"};

std::string starred(double stat, bool reject) { return fmt6(stat) + (reject ? "*" : ""); }

void adf_text(std::string& out, const Report& r, const Labels& L) {
    const auto level = level_from_value(r.significance);
    out += std::string(L.adf_title) + "\n";
    out += lpad(L.variable, 16) + lpad(L.form, 18) + pad(L.constant, 18) + pad(L.constant_trend, 18) +
           pad(L.order, 8) + "\n";
    for (const auto& row : r.adf_table) {
        const std::string order = row.integration_order ? "I(" + std::to_string(*row.integration_order) + ")" : "?";
        out += lpad(row.variable, 16) + lpad(L.level, 18) +
               pad(starred(row.level_constant.statistic, row.level_constant.rejects(level)), 18) +
               pad(starred(row.level_trend.statistic, row.level_trend.rejects(level)), 18) + pad(order, 8) + "\n";
        out += lpad("", 16) + lpad(L.first_diff, 18) +
               pad(starred(row.diff_constant.statistic, row.diff_constant.rejects(level)), 18) +
               pad(starred(row.diff_trend.statistic, row.diff_trend.rejects(level)), 18) + "\n";
    }
    out += "* rejects a unit root at the " + percent(r.significance) + " level\n\n";
}

void lag_text(std::string& out, const LagSelectionTable& t, const Labels& L) {
    out += std::string(L.lag_title) + " (T = " + std::to_string(t.nobs) + ")\n";
    out += lpad(L.lag, 8) + pad("LR", 16) + pad("FPE", 16) + pad("AIC", 16) + pad("SC", 16) + pad("HQ", 16) + "\n";
    for (const auto& row : t.rows) {
        auto cell = [&](double v, int chosen) { return pad(fmt6(v) + (row.lag == chosen ? "*" : ""), 16); };
        out += lpad(std::to_string(row.lag), 8) +
               (row.lr ? cell(*row.lr, t.lr_lag) : pad("NA", 16)) + cell(row.fpe, t.fpe_lag) +
               cell(row.aic, t.aic_lag) + cell(row.sc, t.sc_lag) + cell(row.hq, t.hq_lag) + "\n";
    }
    out += "* selected lag\n\n";
}

void johansen_text(std::string& out, const JohansenResult& j, const Labels& L) {
    out += std::string(L.johansen_title) + " (case " + std::to_string(static_cast<int>(j.det_case)) +
           ", k = " + std::to_string(j.k_var) + ", T = " + std::to_string(j.nobs) + ")\n";
    auto block = [&](const char* stat_label, const std::vector<double>& stats, const std::vector<double>& cvs,
                     const std::vector<double>& ps) {
        out += lpad(L.hypothesis, 14) + pad(L.eigenvalue, 14) + pad(stat_label, 22) + pad(L.critical, 16) +
               pad(L.prob, 16) + "\n";
        for (std::size_t r = 0; r < stats.size(); ++r) {
            const std::string hyp = r == 0 ? std::string(L.none) : std::string(L.at_most) + " " + std::to_string(r);
            out += lpad(hyp + (stats[r] > cvs[r] ? " *" : ""), 14) +
                   pad(fmt6(j.eigenvalues[static_cast<Eigen::Index>(r)]), 14) + pad(fmt6(stats[r]), 22) +
                   pad(fmt6(cvs[r]), 16) + pad(fmt6(ps[r]), 16) + "\n";
        }
    };
    block(L.trace_stat, j.trace_stats, j.trace_critical, j.trace_p);
    block(L.max_stat, j.max_eig_stats, j.max_eig_critical, j.max_eig_p);
    out += "Trace rank " + std::to_string(j.trace_rank) + ", max-eigen rank " + std::to_string(j.max_eig_rank) +
           " at the " + percent(level_value(j.level)) + " level\n\n";
}

void vecm_text(std::string& out, const Report& r, const Labels& L) {
    const auto& f = *r.vecm_table;
    out += std::string(L.vecm_title) + " (rank " + std::to_string(f.rank) + ", " + std::to_string(f.lag_diffs) +
           " lagged differences, T = " + std::to_string(f.nobs) + ")\n";
    out += lpad("", 22);
    for (const auto& eq : f.equations) out += pad("D(" + eq.name + ")", 30);
    out += "\n";
    auto cell = [](double coef, double t) { return pad(fmt6(coef) + " [" + fmt6(t) + "]", 30); };
    for (int h = 0; h < f.rank; ++h) {
        out += lpad(std::string(L.ect) + std::to_string(h + 1), 22);
        for (const auto& eq : f.equations) out += cell(eq.ect_coeffs[h], eq.ect_tstats[h]);
        out += "\n";
    }
    for (int j = 1; j <= f.lag_diffs; ++j) {
        for (int m = 0; m < f.variables(); ++m) {
            out += lpad("D(" + f.names[static_cast<std::size_t>(m)] + ")(-" + std::to_string(j) + ")", 22);
            for (const auto& eq : f.equations) {
                const double c = eq.short_run(j - 1, m);
                const double se = eq.short_run_stderr(j - 1, m);
                out += cell(c, se > 0.0 ? c / se : 0.0);
            }
            out += "\n";
        }
    }
    if (f.free_intercept) {
        out += lpad(L.intercept, 22);
        for (const auto& eq : f.equations) out += cell(eq.intercept, eq.fit.t_stats[0]);
        out += "\n";
    }
    out += "Long-run adjustment (lambda < 0 and |t| > 1.96):\n";
    for (const auto& lr : r.long_run) {
        out += "  " + lpad(lr.equation, 20) + lpad(std::string(L.ect) + std::to_string(lr.relation + 1), 24) +
               pad(fmt6(lr.result.lambda), 14) + pad(fmt6(lr.result.tstat), 14) +
               (lr.result.significant ? "  significant" : "  not significant") + "\n";
    }
    out += "\n";
}

void causality_text(std::string& out, const Report& r, const Labels& L) {
    out += std::string(L.wald_title) + "\n";
    out += lpad(L.dependent, 22) + pad(L.chi_sq, 16) + pad(L.df, 8) + pad(L.prob, 16) + "\n";
    for (const auto& w : r.block_tests) {
        out += lpad(w.target_equation, 22) + pad(fmt6(w.chi_square) + (w.p_value < r.significance ? "*" : ""), 16) +
               pad(std::to_string(w.df), 8) + pad(fmt6(w.p_value), 16) + "\n";
    }
    out += "\n" + lpad("Source -> target", 34) + pad(L.chi_sq, 16) + pad(L.df, 8) + pad(L.prob, 16) + "\n";
    for (const auto& e : r.causality_table) {
        out += lpad(e.source + " -> " + e.target, 34) +
               pad(fmt6(e.wald.chi_square) + (e.significant ? "*" : ""), 16) + pad(std::to_string(e.wald.df), 8) +
               pad(fmt6(e.wald.p_value), 16) + (e.bidirectional ? "  bidirectional" : "") + "\n";
    }
    out += "\n";
}

void diagnostics_text(std::string& out, const Report& r, const Labels& L) {
    out += std::string(L.diag_title) + "\n";
    out += lpad("Equation", 18) + pad("Mean", 14) + pad("Median", 14) + pad("Maximum", 14) + pad("Minimum", 14) +
           pad("Std. Dev.", 14) + pad("Skewness", 14) + pad("Kurtosis", 14) + pad("Jarque-Bera", 14) +
           pad("Probability", 14) + "\n";
    for (const auto& d : r.diagnostics_block) {
        const auto& n = d.normality;
        out += lpad(d.equation, 18) + pad(fmt6(n.mean), 14) + pad(fmt6(n.median), 14) + pad(fmt6(n.max), 14) +
               pad(fmt6(n.min), 14) + pad(fmt6(n.std_dev), 14) + pad(fmt6(n.skewness), 14) +
               pad(fmt6(n.kurtosis), 14) + pad(fmt6(n.jarque_bera), 14) + pad(fmt6(n.p_value), 14) + "\n";
    }
    out += "\n" + lpad("Equation", 18) + pad("LM lags", 10) + pad("F-statistic", 16) + pad("Prob. F", 14) +
           pad("Obs*R-squared", 16) + pad("Prob. Chi-Sq", 14) + "\n";
    for (const auto& d : r.diagnostics_block) {
        const auto& bg = d.serial_correlation;
        out += lpad(d.equation, 18) + pad(std::to_string(bg.lags), 10) + pad(fmt6(bg.f_stat), 16) +
               pad(fmt6(bg.f_p_value), 14) + pad(fmt6(bg.lm_stat), 16) + pad(fmt6(bg.lm_p_value), 14) + "\n";
    }
    out += "\n";
}

}  // namespace

nlohmann::json to_json(const Report& r) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["input"] = r.input;
    out["variables"] = r.variables;
    out["sample"] = {{"first_year", r.sample.first_year}, {"last_year", r.sample.last_year}};
    out["significance"] = r.significance;
    out["seed"] = r.seed;
    out["verdict"] = {{"code", std::string(to_string(r.verdict.code))}, {"message", r.verdict.message}};
    out["decisions_log"] = r.decisions_log;

    json adf = json::array();
    for (const auto& row : r.adf_table) {
        adf.push_back({{"variable", row.variable},
                       {"level", {{"constant", adf_json(row.level_constant)}, {"constant_trend", adf_json(row.level_trend)}}},
                       {"first_difference",
                        {{"constant", adf_json(row.diff_constant)}, {"constant_trend", adf_json(row.diff_trend)}}},
                       {"integration_order", row.integration_order ? json(*row.integration_order) : json(nullptr)}});
    }
    out["adf"] = {{"classification_det_case", std::string(to_string(r.adf_det_case))}, {"rows", adf}};
    out["lag_selection"] = r.lag_table ? lag_json(*r.lag_table) : json(nullptr);
    out["johansen"] = r.johansen_table ? johansen_json(*r.johansen_table) : json(nullptr);
    out["vecm"] = r.vecm_table ? vecm_json(*r.vecm_table) : json(nullptr);

    json long_run = json::array();
    for (const auto& lr : r.long_run) {
        long_run.push_back({{"equation", lr.equation},
                            {"relation", lr.relation},
                            {"lambda", num(lr.result.lambda)},
                            {"tstat", num(lr.result.tstat)},
                            {"significant", lr.result.significant}});
    }
    out["long_run_causality"] = long_run;

    json pairs = json::array();
    for (const auto& e : r.causality_table) {
        pairs.push_back({{"source", e.source},
                         {"target", e.target},
                         {"wald", wald_json(e.wald)},
                         {"significant", e.significant},
                         {"bidirectional", e.bidirectional}});
    }
    json blocks = json::array();
    for (const auto& w : r.block_tests) blocks.push_back(wald_json(w));
    out["causality"] = {{"pairs", pairs}, {"blocks", blocks}};

    json diag = json::array();
    for (const auto& d : r.diagnostics_block) {
        const auto& n = d.normality;
        const auto& bg = d.serial_correlation;
        diag.push_back({{"equation", d.equation},
                        {"normality",
                         {{"mean", num(n.mean)},
                          {"median", num(n.median)},
                          {"max", num(n.max)},
                          {"min", num(n.min)},
                          {"std_dev", num(n.std_dev)},
                          {"skewness", num(n.skewness)},
                          {"kurtosis", num(n.kurtosis)},
                          {"jarque_bera", num(n.jarque_bera)},
                          {"p_value", num(n.p_value)},
                          {"nobs", n.nobs}}},
                        {"breusch_godfrey",
                         {{"lags", bg.lags},
                          {"lm_stat", num(bg.lm_stat)},
                          {"lm_p_value", num(bg.lm_p_value)},
                          {"f_stat", num(bg.f_stat)},
                          {"f_p_value", num(bg.f_p_value)},
                          {"r_squared", num(bg.r_squared)},
                          {"nobs", bg.nobs}}}});
    }
    out["diagnostics"] = diag;
    return out;
}

std::string render_text(const Report& r, Language language) {
    const Labels& L = language == Language::tr ? kTurkish : kEnglish;
    std::string out;
    out += "Input: " + r.input + "\nSample: " + std::to_string(r.sample.first_year) + "-" +
           std::to_string(r.sample.last_year) + "\n\n";
    if (!r.adf_table.empty()) adf_text(out, r, L);
    if (r.lag_table) lag_text(out, *r.lag_table, L);
    if (r.johansen_table) johansen_text(out, *r.johansen_table, L);
    if (r.vecm_table) vecm_text(out, r, L);
    if (!r.causality_table.empty() || !r.block_tests.empty()) causality_text(out, r, L);
    if (!r.diagnostics_block.empty()) diagnostics_text(out, r, L);
    out += "Verdict: " + std::string(to_string(r.verdict.code)) + " - " + r.verdict.message + "\n";
    if (!r.decisions_log.empty()) {
        out += "Decisions:\n";
        for (const auto& d : r.decisions_log) out += "  - " + d + "\n";
    }
    return out;
}

std::string render(const Report& report, OutputFormat format, Language language) {
    if (format == OutputFormat::json) return to_json(report).dump(2) + "\n";
    return render_text(report, language);
}

}  // namespace tsecon
