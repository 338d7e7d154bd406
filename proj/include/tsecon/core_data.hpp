#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace tsecon {

/// One named annual series. Observation t belongs to year start_year + t.
class TimeSeries {
public:
    TimeSeries(std::string name, int start_year, std::vector<double> values);

    const std::string& name() const noexcept { return name_; }
    int start_year() const noexcept { return start_year_; }
    int end_year() const noexcept { return start_year_ + static_cast<int>(values_.size()) - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t t) const { return values_[t]; }
    double at_year(int year) const;

    /// Same values and years under a different name.
    TimeSeries renamed(std::string name) const;

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::string name_;
    int start_year_;
    std::vector<double> values_;
};

struct Sample {
    int first_year;
    int last_year;
    int length() const noexcept { return last_year - first_year + 1; }
    friend bool operator==(const Sample&, const Sample&) = default;
};

/// Ordered collection of uniquely named series.
class Dataset {
public:
    explicit Dataset(std::vector<TimeSeries> series);

    const std::vector<TimeSeries>& series() const noexcept { return series_; }
    std::size_t width() const noexcept { return series_.size(); }

    /// Hull of the member year ranges; equals the common window once aligned.
    Sample sample() const noexcept { return sample_; }
    bool is_aligned() const noexcept;

    const TimeSeries& operator[](std::size_t i) const { return series_[i]; }
    const TimeSeries& by_name(const std::string& name) const;
    std::vector<std::string> names() const;

    /// Subset in the requested order.
    Dataset select(const std::vector<std::string>& names) const;

    /// Observations as a (T x k) matrix, one column per series. Requires alignment.
    Eigen::MatrixXd to_matrix() const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<TimeSeries> series_;
    Sample sample_;
};

struct CsvOptions {
    char delimiter = ',';
    char decimal_separator = '.';
    /// Header name of the year column; empty means the first column.
    std::string year_column;
    /// Columns to load; empty means every non-year column.
    std::vector<std::string> value_columns;
    /// Columns replaced by their natural logarithm after parsing.
    std::vector<std::string> log_columns;

    /// Defaults with the decimal separator taken from TSECON_CSV_DECIMAL when set.
    static CsvOptions from_environment();
};

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});
Dataset parse_csv(const std::string& text, const CsvOptions& options = {});

/// Writes an aligned dataset with a "year" column and round-trip precision.
std::string to_csv(const Dataset& ds, char delimiter = ',');
void save_csv(const Dataset& ds, const std::filesystem::path& path, char delimiter = ',');

/// order-th difference; start year advances by order.
TimeSeries difference(const TimeSeries& s, int order = 1);

/// Series shifted k periods: entry t equals s[t-k] over the overlapping years.
TimeSeries lag(const TimeSeries& s, int k);

/// Trims every series to the intersection of their year ranges.
Dataset align(const Dataset& ds);

}  // namespace tsecon
