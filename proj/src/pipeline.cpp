#include "tsecon/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tsecon {

std::string_view to_string(VerdictCode v) {
    switch (v) {
        case VerdictCode::complete: return "complete";
        case VerdictCode::all_stationary: return "all_stationary";
        case VerdictCode::mixed_integration: return "mixed_integration";
        case VerdictCode::order_undetermined: return "order_undetermined";
        case VerdictCode::no_cointegration: return "no_cointegration";
    }
    return "?";
}

int exit_code_for(const std::exception& e) {
    if (const auto* stage = dynamic_cast<const StageError*>(&e)) return stage->exit_code();
    if (dynamic_cast<const ConfigError*>(&e) != nullptr) return 2;
    if (dynamic_cast<const DataError*>(&e) != nullptr) return 3;
    if (dynamic_cast<const NumericalError*>(&e) != nullptr) return 4;
    return 1;
}

StageError::StageError(std::string stage, const std::exception& cause)
    : Error(stage + ": " + cause.what()), stage_(std::move(stage)), exit_code_(exit_code_for(cause)) {}

void PipelineConfig::validate() const {
    if (variables.empty()) throw ConfigError("no variables selected");
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i].empty()) throw ConfigError("empty variable name");
        for (std::size_t j = i + 1; j < variables.size(); ++j) {
            if (variables[i] == variables[j]) throw ConfigError("variable '" + variables[i] + "' listed twice");
        }
    }
    if (input.empty()) throw ConfigError("no input file");
    if (max_lag && *max_lag < 1) throw ConfigError("max_lag must be at least 1");
    if (var_lag && *var_lag < 1) throw ConfigError("VAR lag must be at least 1");
    if (rank && *rank < 0) throw ConfigError("rank must be non-negative");
    if (vecm_lag_diffs && *vecm_lag_diffs < 0) throw ConfigError("VECM lagged differences must be non-negative");
    if (bg_lags && *bg_lags < 1) throw ConfigError("Breusch-Godfrey lags must be at least 1");
    level_from_value(significance);
}

Dataset load_input(const PipelineConfig& cfg) {
    CsvOptions opts = cfg.csv;
    opts.value_columns = cfg.variables;
    return align(load_csv(cfg.input, opts));
}

namespace {

void log(Report& report, std::string line) { report.decisions_log.push_back(std::move(line)); }

int schwert_max_lag(int n) {
    return static_cast<int>(std::floor(12.0 * std::pow(n / 100.0, 0.25)));
}

}  // namespace

void run_adf_stage(PipelineConfig& cfg, const Dataset& ds, Report& report) {
    const int n = ds.sample().length();
    if (!cfg.adf_det_case) {
        cfg.adf_det_case = DetCase::constant_trend;
        log(report, "adf: integration order classified with constant and trend (default)");
    }
    if (!cfg.adf_lag_spec) {
        // Up to two differences must still leave 20 regression observations.
        const int cap = n - 23;
        if (cap < 0) throw DataError("series of length " + std::to_string(n) + " is too short for unit-root testing");
        const int max_p = std::clamp(schwert_max_lag(n), 0, cap);
        cfg.adf_lag_spec = AutoLag{max_p, InfoCriterion::sic};
        log(report, "adf: lag order chosen by SIC over 0.." + std::to_string(max_p) + " (default)");
    }
    report.adf_det_case = *cfg.adf_det_case;

    report.adf_table.clear();
    for (const auto& s : ds.series()) {
        AdfRow row;
        row.variable = s.name();
        const auto d1 = difference(s, 1);
        row.level_constant = adf_test(s, DetCase::constant, *cfg.adf_lag_spec);
        row.level_trend = adf_test(s, DetCase::constant_trend, *cfg.adf_lag_spec);
        row.diff_constant = adf_test(d1, DetCase::constant, *cfg.adf_lag_spec);
        row.diff_trend = adf_test(d1, DetCase::constant_trend, *cfg.adf_lag_spec);
        try {
            row.integration_order = integration_order(s, *cfg.adf_det_case, *cfg.adf_lag_spec, 2);
        } catch (const OrderUndeterminedError&) {
            row.integration_order.reset();
        }
        report.adf_table.push_back(std::move(row));
    }
}

void run_lag_stage(PipelineConfig& cfg, const Dataset& ds, Report& report) {
    if (!cfg.max_lag) {
        cfg.max_lag = 3;
        log(report, "varselect: maximum lag 3 (default for annual data)");
    }
    report.lag_table = lag_order_table(ds, *cfg.max_lag);
    if (!cfg.var_lag) {
        cfg.var_lag = std::max(1, report.lag_table->aic_lag);
        log(report, "varselect: VAR order " + std::to_string(*cfg.var_lag) + " taken from AIC" +
                        (report.lag_table->aic_lag == 0 ? " (raised from 0 to 1)" : ""));
    }
}

void run_johansen_stage(PipelineConfig& cfg, const Dataset& ds, Report& report) {
    if (!cfg.var_lag) {
        cfg.var_lag = 1;
        log(report, "johansen: VAR order 1 in levels (default)");
    }
    if (!cfg.johansen_case) {
        cfg.johansen_case = JohansenCase::unrestricted_constant;
        log(report, "johansen: unrestricted constant, case 3 (default)");
    }
    report.johansen_table = johansen_test(ds, *cfg.var_lag, *cfg.johansen_case, level_from_value(cfg.significance));
    if (!cfg.rank) {
        cfg.rank = report.johansen_table->decided_rank;
        log(report, "johansen: cointegrating rank " + std::to_string(*cfg.rank) + " from the trace sequence");
    }
    const auto& jt = *report.johansen_table;
    if (jt.trace_rank != jt.max_eig_rank) {
        log(report, "johansen: trace rank " + std::to_string(jt.trace_rank) + " and max-eigen rank " +
                        std::to_string(jt.max_eig_rank) + " disagree");
    }
}

void run_vecm_stage(PipelineConfig& cfg, const Dataset& ds, Report& report) {
    if (!cfg.var_lag) {
        cfg.var_lag = 1;
        log(report, "vecm: VAR order 1 in levels (default)");
    }
    if (!cfg.johansen_case) {
        cfg.johansen_case = JohansenCase::unrestricted_constant;
        log(report, "vecm: unrestricted constant, case 3 (default)");
    }
    if (!cfg.vecm_lag_diffs) {
        cfg.vecm_lag_diffs = std::max(*cfg.var_lag - 1, 1);
        if (*cfg.var_lag - 1 < 1) {
            log(report, "vecm: one lagged difference (levels order 2) so short-run Wald tests have restrictions");
        } else {
            log(report, "vecm: " + std::to_string(*cfg.vecm_lag_diffs) + " lagged differences from the VAR order");
        }
    }
    if (!cfg.rank) {
        const auto jo = johansen_test(ds, *cfg.vecm_lag_diffs + 1, *cfg.johansen_case, level_from_value(cfg.significance));
        cfg.rank = jo.decided_rank;
        log(report, "vecm: cointegrating rank " + std::to_string(*cfg.rank) + " from the trace sequence");
    }
    report.vecm_table = fit_vecm(ds, *cfg.rank, *cfg.vecm_lag_diffs + 1, *cfg.johansen_case);
    report.long_run.clear();
    const auto& fit = *report.vecm_table;
    for (int i = 0; i < fit.variables(); ++i) {
        for (int h = 0; h < fit.rank; ++h) {
            report.long_run.push_back({fit.names[static_cast<std::size_t>(i)], h, long_run_causality(fit, i, h)});
        }
    }
}

void run_causality_stage(const PipelineConfig& cfg, Report& report) {
    if (!report.vecm_table) throw ConfigError("causality needs a fitted VECM");
    const auto& fit = *report.vecm_table;
    report.causality_table = causality_matrix(fit, cfg.significance);
    report.block_tests.clear();
    if (fit.variables() < 2) return;
    for (int target = 0; target < fit.variables(); ++target) {
        std::vector<int> sources;
        for (int s = 0; s < fit.variables(); ++s) {
            if (s != target) sources.push_back(s);
        }
        report.block_tests.push_back(wald_block(fit, target, sources));
    }
}

void run_diagnostics_stage(PipelineConfig& cfg, Report& report) {
    if (!report.vecm_table) throw ConfigError("diagnostics need a fitted VECM");
    if (!cfg.bg_lags) {
        cfg.bg_lags = 2;
        log(report, "diagnostics: Breusch-Godfrey with 2 lags (default)");
    }
    const auto& fit = *report.vecm_table;
    report.diagnostics_block.clear();
    for (const auto& eq : fit.equations) {
        EquationDiagnostics d;
        d.equation = eq.name;
        const std::span<const double> resid(eq.fit.residuals.data(), static_cast<std::size_t>(eq.fit.residuals.size()));
        d.normality = jarque_bera(resid);
        d.serial_correlation = breusch_godfrey(fit.design, eq.fit.residuals, *cfg.bg_lags);
        report.diagnostics_block.push_back(d);
    }
}

Report run_pipeline(PipelineConfig cfg) {
    cfg.validate();
    Report report;
    report.input = cfg.input.string();
    report.variables = cfg.variables;
    report.significance = cfg.significance;
    report.seed = cfg.seed;

    Dataset ds = [&] {
        try {
            return load_input(cfg);
        } catch (const std::exception& e) {
            throw StageError("load", e);
        }
    }();
    report.sample = ds.sample();

    auto stage = [&](const char* name, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            throw StageError(name, e);
        }
    };

    stage("adf", [&] { run_adf_stage(cfg, ds, report); });
    const auto& rows = report.adf_table;
    auto has_order = [&](int d) {
        return std::all_of(rows.begin(), rows.end(), [&](const AdfRow& r) { return r.integration_order == d; });
    };
    if (std::any_of(rows.begin(), rows.end(), [](const AdfRow& r) { return !r.integration_order; })) {
        report.verdict = {VerdictCode::order_undetermined,
                          "at least one series does not reject a unit root up to the second difference; "
                          "cointegration analysis not applicable"};
        return report;
    }
    if (has_order(0)) {
        report.verdict = {VerdictCode::all_stationary,
                          "all series are I(0); cointegration analysis not applicable"};
        return report;
    }
    if (!has_order(1)) {
        report.verdict = {VerdictCode::mixed_integration,
                          "series have different integration orders; the Johansen procedure requires every "
                          "series to be I(1)"};
        return report;
    }

    stage("varselect", [&] { run_lag_stage(cfg, ds, report); });
    stage("johansen", [&] { run_johansen_stage(cfg, ds, report); });
    if (*cfg.rank == 0) {
        report.verdict = {VerdictCode::no_cointegration,
                          "no cointegrating relation at the chosen level; a VECM is not applicable"};
        return report;
    }
    stage("vecm", [&] { run_vecm_stage(cfg, ds, report); });
    stage("causality", [&] { run_causality_stage(cfg, report); });
    stage("diagnostics", [&] { run_diagnostics_stage(cfg, report); });
    report.verdict = {VerdictCode::complete, "all stages completed"};
    return report;
}

}  // namespace tsecon
