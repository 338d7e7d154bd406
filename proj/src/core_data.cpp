#include "tsecon/core_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "tsecon/errors.hpp"

namespace tsecon {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split(std::string_view line, char delim) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        auto next = line.find(delim, pos);
        out.emplace_back(trim(line.substr(pos, next == std::string_view::npos ? next : next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

std::optional<double> parse_number(std::string cell, char decimal_separator) {
    if (decimal_separator != '.') {
        if (cell.find('.') != std::string::npos) return std::nullopt;
        std::replace(cell.begin(), cell.end(), decimal_separator, '.');
    }
    if (!cell.empty() && cell.front() == '+') cell.erase(0, 1);
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::optional<int> parse_year(const std::string& cell) {
    int year = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), year);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) return std::nullopt;
    return year;
}

}  // namespace

// ---------------------------------------------------------------------------
// TimeSeries / Dataset
// ---------------------------------------------------------------------------

TimeSeries::TimeSeries(std::string name, int start_year, std::vector<double> values)
    : name_(std::move(name)), start_year_(start_year), values_(std::move(values)) {
    if (values_.empty()) throw LengthError("series '" + name_ + "' is empty");
    for (std::size_t t = 0; t < values_.size(); ++t) {
        if (!std::isfinite(values_[t])) throw GapError(start_year_ + static_cast<int>(t), name_);
    }
}

double TimeSeries::at_year(int year) const {
    if (year < start_year_ || year > end_year()) {
        throw LengthError("year " + std::to_string(year) + " outside series '" + name_ + "'");
    }
    return values_[static_cast<std::size_t>(year - start_year_)];
}

TimeSeries TimeSeries::renamed(std::string name) const {
    return TimeSeries(std::move(name), start_year_, values_);
}

Dataset::Dataset(std::vector<TimeSeries> series) : series_(std::move(series)), sample_{0, -1} {
    std::set<std::string> seen;
    for (const auto& s : series_) {
        if (!seen.insert(s.name()).second) throw DataError("duplicate series name '" + s.name() + "'");
    }
    if (!series_.empty()) {
        sample_.first_year = series_.front().start_year();
        sample_.last_year = series_.front().end_year();
        for (const auto& s : series_) {
            sample_.first_year = std::min(sample_.first_year, s.start_year());
            sample_.last_year = std::max(sample_.last_year, s.end_year());
        }
    }
}

bool Dataset::is_aligned() const noexcept {
    return std::all_of(series_.begin(), series_.end(), [&](const TimeSeries& s) {
        return s.start_year() == sample_.first_year && s.end_year() == sample_.last_year;
    });
}

const TimeSeries& Dataset::by_name(const std::string& name) const {
    auto it = std::find_if(series_.begin(), series_.end(),
                           [&](const TimeSeries& s) { return s.name() == name; });
    if (it == series_.end()) throw ConfigError("no series named '" + name + "'");
    return *it;
}

std::vector<std::string> Dataset::names() const {
    std::vector<std::string> out;
    out.reserve(series_.size());
    for (const auto& s : series_) out.push_back(s.name());
    return out;
}

Dataset Dataset::select(const std::vector<std::string>& names) const {
    std::vector<TimeSeries> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(by_name(n));
    return Dataset(std::move(out));
}

Eigen::MatrixXd Dataset::to_matrix() const {
    if (!is_aligned()) throw DataError("dataset is not aligned");
    Eigen::MatrixXd m(sample_.length(), static_cast<Eigen::Index>(series_.size()));
    for (std::size_t j = 0; j < series_.size(); ++j) {
        auto v = series_[j].values();
        for (std::size_t t = 0; t < v.size(); ++t) m(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j)) = v[t];
    }
    return m;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

CsvOptions CsvOptions::from_environment() {
    CsvOptions opts;
    if (const char* env = std::getenv("TSECON_CSV_DECIMAL"); env != nullptr && env[0] != '\0') {
        opts.decimal_separator = env[0];
    }
    return opts;
}

Dataset parse_csv(const std::string& text, const CsvOptions& options) {
    if (options.delimiter == options.decimal_separator) {
        throw ConfigError("delimiter and decimal separator must differ");
    }
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (!trim(line).empty()) {
            header = split(line, options.delimiter);
            break;
        }
    }
    if (header.empty()) throw ParseError(0, "", "missing header row");
    if (!header[0].empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0].erase(0, 3);

    std::size_t year_idx = 0;
    if (!options.year_column.empty()) {
        auto it = std::find(header.begin(), header.end(), options.year_column);
        if (it == header.end()) throw ParseError(0, options.year_column, "year column not found");
        year_idx = static_cast<std::size_t>(it - header.begin());
    }

    std::vector<std::size_t> value_idx;
    if (options.value_columns.empty()) {
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (j != year_idx) value_idx.push_back(j);
        }
    } else {
        for (const auto& name : options.value_columns) {
            auto it = std::find(header.begin(), header.end(), name);
            if (it == header.end()) throw ConfigError("variable '" + name + "' not found in the file");
            value_idx.push_back(static_cast<std::size_t>(it - header.begin()));
        }
    }
    if (value_idx.empty()) throw ParseError(0, "", "no value columns");

    std::vector<int> years;
    std::vector<std::vector<double>> columns(value_idx.size());
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        auto cells = split(line, options.delimiter);
        if (year_idx >= cells.size() || cells[year_idx].empty()) {
            throw ParseError(row, header[year_idx], "missing year");
        }
        auto year = parse_year(cells[year_idx]);
        if (!year) throw ParseError(row, header[year_idx], "unparseable year '" + cells[year_idx] + "'");
        if (!years.empty() && *year != years.back() + 1) {
            throw OrderError("year " + std::to_string(*year) + " at row " + std::to_string(row) +
                             " does not follow " + std::to_string(years.back()));
        }
        years.push_back(*year);
        for (std::size_t c = 0; c < value_idx.size(); ++c) {
            const auto j = value_idx[c];
            if (j >= cells.size() || cells[j].empty() || cells[j] == "NA" || cells[j] == "NaN") {
                throw GapError(*year, header[j]);
            }
            auto v = parse_number(cells[j], options.decimal_separator);
            if (!v) throw ParseError(row, header[j], "unparseable number '" + cells[j] + "'");
            columns[c].push_back(*v);
        }
    }
    if (years.empty()) throw ParseError(row, "", "no data rows");

    std::vector<TimeSeries> series;
    for (std::size_t c = 0; c < value_idx.size(); ++c) {
        const auto& name = header[value_idx[c]];
        auto values = std::move(columns[c]);
        if (std::find(options.log_columns.begin(), options.log_columns.end(), name) != options.log_columns.end()) {
            for (std::size_t t = 0; t < values.size(); ++t) {
                if (values[t] <= 0.0) {
                    throw ParseError(t + 1, name, "log transform of non-positive value");
                }
                values[t] = std::log(values[t]);
            }
        }
        series.emplace_back(name, years.front(), std::move(values));
    }
    return Dataset(std::move(series));
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), options);
}

std::string to_csv(const Dataset& ds, char delimiter) {
    if (!ds.is_aligned()) throw DataError("dataset is not aligned");
    std::string out = "year";
    for (const auto& s : ds.series()) {
        out += delimiter;
        out += s.name();
    }
    out += '\n';
    char buf[64];
    for (int year = ds.sample().first_year; year <= ds.sample().last_year; ++year) {
        out += std::to_string(year);
        for (const auto& s : ds.series()) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, s.at_year(year));
            out += delimiter;
            out.append(buf, ptr);
        }
        out += '\n';
    }
    return out;
}

void save_csv(const Dataset& ds, const std::filesystem::path& path, char delimiter) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << to_csv(ds, delimiter);
}

// ---------------------------------------------------------------------------
// Transformations
// ---------------------------------------------------------------------------

TimeSeries difference(const TimeSeries& s, int order) {
    if (order < 1) throw LengthError("difference order must be positive");
    if (static_cast<std::size_t>(order) >= s.size()) {
        throw LengthError("difference order " + std::to_string(order) + " >= length " + std::to_string(s.size()));
    }
    std::vector<double> v(s.values().begin(), s.values().end());
    for (int d = 0; d < order; ++d) {
        for (std::size_t t = 0; t + 1 < v.size(); ++t) v[t] = v[t + 1] - v[t];
        v.pop_back();
    }
    return TimeSeries(s.name(), s.start_year() + order, std::move(v));
}

TimeSeries lag(const TimeSeries& s, int k) {
    if (k < 1) throw LengthError("lag must be positive");
    if (static_cast<std::size_t>(k) >= s.size()) {
        throw LengthError("lag " + std::to_string(k) + " >= length " + std::to_string(s.size()));
    }
    std::vector<double> v(s.values().begin(), s.values().end() - k);
    return TimeSeries(s.name(), s.start_year() + k, std::move(v));
}

Dataset align(const Dataset& ds) {
    if (ds.width() == 0) return ds;
    int first = ds[0].start_year();
    int last = ds[0].end_year();
    for (const auto& s : ds.series()) {
        first = std::max(first, s.start_year());
        last = std::min(last, s.end_year());
    }
    if (first > last) throw NoOverlapError("series share no common year");
    std::vector<TimeSeries> out;
    out.reserve(ds.width());
    for (const auto& s : ds.series()) {
        auto v = s.values().subspan(static_cast<std::size_t>(first - s.start_year()),
                                    static_cast<std::size_t>(last - first + 1));
        out.emplace_back(s.name(), first, std::vector<double>(v.begin(), v.end()));
    }
    return Dataset(std::move(out));
}

}  // namespace tsecon
