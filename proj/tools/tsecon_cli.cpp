// Command-line front end: one subcommand per pipeline stage, the full
// pipeline, and Monte Carlo utilities for the null distributions.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsecon/montecarlo.hpp"
#include "tsecon/pipeline.hpp"

using namespace tsecon;

namespace {

struct CommonFlags {
    std::string input;
    std::vector<std::string> vars;
    std::string format = "text";
    std::string lang = "en";
    std::string decimal;
    std::string delimiter = ",";
    std::string year_column;
    std::vector<std::string> log_columns;
    double significance = 0.05;
    std::uint64_t seed = 0;
};

struct StageFlags {
    std::optional<int> max_lag;
    std::optional<int> var_lag;
    std::optional<std::string> adf_det_case;
    std::optional<int> adf_lags;
    std::optional<int> adf_max_lags;
    std::string adf_criterion = "sic";
    std::optional<std::string> johansen_case;
    std::optional<int> rank;
    std::optional<int> lag_diffs;
    std::optional<int> bg_lags;
};

void add_common(CLI::App* app, CommonFlags& f) {
    app->add_option("--input,-i", f.input, "CSV file with a year column and one column per variable")->required();
    app->add_option("--vars,-v", f.vars, "Variables to analyse, in order")->delimiter(',')->required();
    app->add_option("--format,-f", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--lang", f.lang, "Table labels")->check(CLI::IsMember({"en", "tr"}));
    app->add_option("--decimal", f.decimal, "Decimal separator (default '.', or TSECON_CSV_DECIMAL)");
    app->add_option("--delimiter", f.delimiter, "Field delimiter");
    app->add_option("--year-column", f.year_column, "Name of the year column (default: first column)");
    app->add_option("--log", f.log_columns, "Columns to replace by their natural logarithm")->delimiter(',');
    app->add_option("--significance,-a", f.significance, "Significance level: 0.01, 0.05 or 0.10");
    app->add_option("--seed", f.seed, "Seed recorded in the report");
}

void add_adf(CLI::App* app, StageFlags& s) {
    app->add_option("--adf-case", s.adf_det_case, "Deterministics for the I(d) classification: n, c or ct");
    app->add_option("--adf-lags", s.adf_lags, "Fixed ADF lag order");
    app->add_option("--adf-max-lags", s.adf_max_lags, "Largest ADF lag for automatic selection");
    app->add_option("--adf-criterion", s.adf_criterion, "Automatic ADF lag criterion")
        ->check(CLI::IsMember({"aic", "sic"}));
}

void add_var(CLI::App* app, StageFlags& s) {
    app->add_option("--max-lag", s.max_lag, "Largest VAR order in the selection table");
}

void add_johansen(CLI::App* app, StageFlags& s) {
    app->add_option("--k-var", s.var_lag, "VAR order in levels");
    app->add_option("--case", s.johansen_case, "Deterministic case: 2, 3 or 4");
}

void add_vecm(CLI::App* app, StageFlags& s) {
    add_johansen(app, s);
    app->add_option("--rank", s.rank, "Cointegrating rank (default: trace decision)");
    app->add_option("--lag-diffs", s.lag_diffs, "Lagged differences in the VECM");
}

PipelineConfig make_config(const CommonFlags& f, const StageFlags& s) {
    PipelineConfig cfg;
    cfg.input = f.input;
    cfg.variables = f.vars;
    if (f.format == "json") cfg.format = OutputFormat::json;
    if (f.lang == "tr") cfg.language = Language::tr;
    if (f.delimiter.size() != 1) throw ConfigError("delimiter must be a single character");
    cfg.csv.delimiter = f.delimiter[0];
    if (!f.decimal.empty()) {
        if (f.decimal.size() != 1) throw ConfigError("decimal separator must be a single character");
        cfg.csv.decimal_separator = f.decimal[0];
    }
    cfg.csv.year_column = f.year_column;
    cfg.csv.log_columns = f.log_columns;
    cfg.significance = f.significance;
    cfg.seed = f.seed;

    cfg.max_lag = s.max_lag;
    cfg.var_lag = s.var_lag;
    if (s.adf_det_case) cfg.adf_det_case = det_case_from_string(*s.adf_det_case);
    if (s.adf_lags && s.adf_max_lags) throw ConfigError("--adf-lags and --adf-max-lags are exclusive");
    if (s.adf_lags) {
        if (*s.adf_lags < 0) throw ConfigError("ADF lag order must be non-negative");
        cfg.adf_lag_spec = FixedLag{*s.adf_lags};
    } else if (s.adf_max_lags) {
        if (*s.adf_max_lags < 0) throw ConfigError("ADF maximum lag must be non-negative");
        cfg.adf_lag_spec =
            AutoLag{*s.adf_max_lags, s.adf_criterion == "aic" ? InfoCriterion::aic : InfoCriterion::sic};
    }
    if (s.johansen_case) cfg.johansen_case = johansen_case_from_string(*s.johansen_case);
    cfg.rank = s.rank;
    cfg.vecm_lag_diffs = s.lag_diffs;
    cfg.bg_lags = s.bg_lags;
    cfg.validate();
    return cfg;
}

template <class Body>
Report run_stage(const char* name, Body&& body) {
    try {
        return body();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e);
    }
}

Report base_report(const PipelineConfig& cfg, const Dataset& ds) {
    Report r;
    r.input = cfg.input.string();
    r.variables = cfg.variables;
    r.sample = ds.sample();
    r.significance = cfg.significance;
    r.seed = cfg.seed;
    return r;
}

struct McFlags {
    std::string det_case;
    int dim = 1;
    int T = 1000;
    int reps = 100000;
    std::uint64_t seed = 1;
    bool serial = false;
};

void print_quantiles(const char* label, std::vector<double> draws, const std::vector<double>& qs) {
    std::printf("%-10s", label);
    for (double q : qs) std::printf("  q%.2f=%.6f", q, mc::empirical_quantile(draws, q));
    std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit-root, cointegration and VECM causality analysis of annual series"};
    app.require_subcommand(1);

    CommonFlags common;
    StageFlags stage;

    auto* adf = app.add_subcommand("adf", "ADF unit-root tests on levels and first differences");
    auto* varselect = app.add_subcommand("varselect", "VAR lag-order selection table");
    auto* johansen = app.add_subcommand("johansen", "Johansen trace and maximum-eigenvalue tests");
    auto* vecm = app.add_subcommand("vecm", "VECM estimates and long-run adjustment");
    auto* causality = app.add_subcommand("causality", "Wald short-run causality from the VECM");
    auto* pipeline = app.add_subcommand("pipeline", "Every stage in sequence");
    for (auto* sub : {adf, varselect, johansen, vecm, causality, pipeline}) add_common(sub, common);
    add_adf(adf, stage);
    add_var(varselect, stage);
    add_johansen(johansen, stage);
    add_vecm(vecm, stage);
    add_vecm(causality, stage);
    add_adf(pipeline, stage);
    add_var(pipeline, stage);
    add_vecm(pipeline, stage);
    for (auto* sub : {vecm, pipeline}) sub->add_option("--bg-lags", stage.bg_lags, "Breusch-Godfrey lags");

    McFlags mcf;
    auto* sim_df = app.add_subcommand("simulate-df", "Monte Carlo quantiles of the Dickey-Fuller t-ratio");
    sim_df->add_option("--case", mcf.det_case, "n, c or ct")->required();
    auto* sim_jo = app.add_subcommand("simulate-johansen", "Monte Carlo quantiles of the rank statistics under r = 0");
    sim_jo->add_option("--case", mcf.det_case, "2, 3 or 4")->required();
    sim_jo->add_option("--dim", mcf.dim, "Number of random walks (k - r)")->check(CLI::Range(1, 6));
    for (auto* sub : {sim_df, sim_jo}) {
        sub->add_option("--T", mcf.T, "Observations per replication")->check(CLI::Range(20, 100000));
        sub->add_option("--reps", mcf.reps, "Replications")->check(CLI::Range(100, 10000000));
        sub->add_option("--seed", mcf.seed, "Base seed");
        sub->add_flag("--serial", mcf.serial, "Use the serial reference kernel");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim_df->parsed()) {
            const DetCase det = det_case_from_string(mcf.det_case);
            auto draws = mcf.serial ? mc::df_tau_draws_serial(det, mcf.T, mcf.reps, mcf.seed)
                                    : mc::df_tau_draws(det, mcf.T, mcf.reps, mcf.seed);
            std::printf("Dickey-Fuller t, case %s, T=%d, reps=%d, threads=%d\n", std::string(to_string(det)).c_str(),
                        mcf.T, mcf.reps, mcf.serial ? 1 : mc::max_threads());
            print_quantiles("tau", std::move(draws), {0.01, 0.05, 0.10});
            return 0;
        }
        if (sim_jo->parsed()) {
            const JohansenCase det = johansen_case_from_string(mcf.det_case);
            auto draws = mcf.serial ? mc::johansen_null_draws_serial(det, mcf.dim, mcf.T, mcf.reps, mcf.seed)
                                    : mc::johansen_null_draws(det, mcf.dim, mcf.T, mcf.reps, mcf.seed);
            std::printf("Johansen r=0, case %d, k-r=%d, T=%d, reps=%d, threads=%d\n", static_cast<int>(det), mcf.dim,
                        mcf.T, mcf.reps, mcf.serial ? 1 : mc::max_threads());
            print_quantiles("trace", std::move(draws.trace), {0.90, 0.95, 0.99});
            print_quantiles("max-eigen", std::move(draws.max_eigen), {0.90, 0.95, 0.99});
            return 0;
        }

        PipelineConfig cfg = make_config(common, stage);
        Report report;
        if (pipeline->parsed()) {
            report = run_pipeline(cfg);
        } else {
            const Dataset ds = [&] {
                try {
                    return load_input(cfg);
                } catch (const std::exception& e) {
                    throw StageError("load", e);
                }
            }();
            report = base_report(cfg, ds);
            if (adf->parsed()) {
                run_stage("adf", [&] { run_adf_stage(cfg, ds, report); return report; });
                report.verdict = {VerdictCode::complete, "unit-root stage completed"};
            } else if (varselect->parsed()) {
                run_stage("varselect", [&] { run_lag_stage(cfg, ds, report); return report; });
                report.verdict = {VerdictCode::complete, "lag-selection stage completed"};
            } else if (johansen->parsed()) {
                run_stage("johansen", [&] { run_johansen_stage(cfg, ds, report); return report; });
                report.verdict = {VerdictCode::complete, "cointegration stage completed"};
            } else {
                run_stage("johansen", [&] { run_johansen_stage(cfg, ds, report); return report; });
                if (*cfg.rank == 0) {
                    report.verdict = {VerdictCode::no_cointegration,
                                      "no cointegrating relation at the chosen level; a VECM is not applicable"};
                } else {
                    run_stage("vecm", [&] { run_vecm_stage(cfg, ds, report); return report; });
                    if (causality->parsed()) {
                        run_stage("causality", [&] { run_causality_stage(cfg, report); return report; });
                    } else {
                        run_stage("diagnostics", [&] { run_diagnostics_stage(cfg, report); return report; });
                    }
                    report.verdict = {VerdictCode::complete, "estimation completed"};
                }
            }
        }
        std::cout << render(report, cfg.format, cfg.language);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
