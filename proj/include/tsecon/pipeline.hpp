#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsecon/core_data.hpp"
#include "tsecon/diagnostics.hpp"
#include "tsecon/errors.hpp"
#include "tsecon/johansen.hpp"
#include "tsecon/unit_root.hpp"
#include "tsecon/var_select.hpp"
#include "tsecon/vecm.hpp"

namespace tsecon {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { text, json };
enum class Language { en, tr };

/// Unset optionals are filled with defaults, each recorded in the decisions log.
struct PipelineConfig {
    std::filesystem::path input;
    CsvOptions csv = CsvOptions::from_environment();
    std::vector<std::string> variables;
    /// Largest VAR order in the lag-selection table (default 3).
    std::optional<int> max_lag;
    /// VAR order in levels used by Johansen (default: AIC choice, at least 1).
    std::optional<int> var_lag;
    /// ADF deterministics used to classify integration order (default constant_trend).
    std::optional<DetCase> adf_det_case;
    /// Default: automatic SIC selection up to floor(12 (n/100)^(1/4)).
    std::optional<LagSpec> adf_lag_spec;
    std::optional<JohansenCase> johansen_case;
    /// Cointegrating rank for the VECM (default: trace decision).
    std::optional<int> rank;
    /// Lagged differences in the VECM (default max(var_lag - 1, 1)).
    std::optional<int> vecm_lag_diffs;
    /// Breusch-Godfrey lag count (default 2).
    std::optional<int> bg_lags;
    double significance = 0.05;
    OutputFormat format = OutputFormat::text;
    Language language = Language::en;
    std::uint64_t seed = 0;

    /// Throws ConfigError; touches no files.
    void validate() const;
};

/// Stage failure with the stage name and the original error category.
class StageError : public Error {
public:
    StageError(std::string stage, const std::exception& cause);
    const std::string& stage() const noexcept { return stage_; }
    int exit_code() const noexcept { return exit_code_; }

private:
    std::string stage_;
    int exit_code_;
};

/// 2 configuration, 3 data, 4 numerical, 1 anything else.
int exit_code_for(const std::exception& e);

struct AdfRow {
    std::string variable;
    AdfResult level_constant;
    AdfResult level_trend;
    AdfResult diff_constant;
    AdfResult diff_trend;
    /// Empty when no order up to 2 rejects.
    std::optional<int> integration_order;
};

struct LongRunEntry {
    std::string equation;
    int relation = 0;
    LongRunCausality result;
};

struct EquationDiagnostics {
    std::string equation;
    NormalityReport normality;
    BreuschGodfrey serial_correlation;
};

enum class VerdictCode { complete, all_stationary, mixed_integration, order_undetermined, no_cointegration };

std::string_view to_string(VerdictCode v);

struct Verdict {
    VerdictCode code = VerdictCode::complete;
    std::string message;
};

struct Report {
    std::string input;
    std::vector<std::string> variables;
    Sample sample{0, -1};
    double significance = 0.05;
    std::uint64_t seed = 0;
    DetCase adf_det_case = DetCase::constant_trend;

    std::vector<AdfRow> adf_table;
    std::optional<LagSelectionTable> lag_table;
    std::optional<JohansenResult> johansen_table;
    std::optional<VecmFit> vecm_table;
    std::vector<LongRunEntry> long_run;
    std::vector<CausalityEntry> causality_table;
    /// Per equation: joint exclusion of every other variable.
    std::vector<WaldResult> block_tests;
    std::vector<EquationDiagnostics> diagnostics_block;
    std::vector<std::string> decisions_log;
    Verdict verdict;
};

/// Loads and aligns the configured variables.
Dataset load_input(const PipelineConfig& cfg);

/// Stage helpers. Each fills the config fields it needs that are still unset
/// and records those defaults in report.decisions_log.
void run_adf_stage(PipelineConfig& cfg, const Dataset& ds, Report& report);
void run_lag_stage(PipelineConfig& cfg, const Dataset& ds, Report& report);
void run_johansen_stage(PipelineConfig& cfg, const Dataset& ds, Report& report);
void run_vecm_stage(PipelineConfig& cfg, const Dataset& ds, Report& report);
void run_causality_stage(const PipelineConfig& cfg, Report& report);
void run_diagnostics_stage(PipelineConfig& cfg, Report& report);

/// ADF, lag selection, Johansen, VECM, causality, diagnostics. A failed
/// precondition of the method ends the report with a verdict instead of an error.
Report run_pipeline(PipelineConfig cfg);

nlohmann::json to_json(const Report& report);
std::string render_text(const Report& report, Language language = Language::en);
std::string render(const Report& report, OutputFormat format, Language language = Language::en);

}  // namespace tsecon
