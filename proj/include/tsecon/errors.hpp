#pragma once

#include <stdexcept>
#include <string>

namespace tsecon {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Configuration / usage errors (CLI exit code 2)
// ---------------------------------------------------------------------------

class ConfigError : public Error {
public:
    using Error::Error;
};

class TableRangeError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class NothingToTestError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class NoCointegrationError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// ---------------------------------------------------------------------------
// Data errors (CLI exit code 3)
// ---------------------------------------------------------------------------

class DataError : public Error {
public:
    using Error::Error;
};

class GapError : public DataError {
public:
    GapError(int year, std::string column)
        : DataError("missing value for column '" + column + "' in year " + std::to_string(year)),
          year_(year), column_(std::move(column)) {}
    int year() const noexcept { return year_; }
    const std::string& column() const noexcept { return column_; }

private:
    int year_;
    std::string column_;
};

class OrderError : public DataError {
public:
    using DataError::DataError;
};

class ParseError : public DataError {
public:
    ParseError(std::size_t row, std::string column, const std::string& what)
        : DataError("row " + std::to_string(row) + ", column '" + column + "': " + what),
          row_(row), column_(std::move(column)) {}
    std::size_t row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::string column_;
};

class LengthError : public DataError {
public:
    using DataError::DataError;
};

class NoOverlapError : public DataError {
public:
    using DataError::DataError;
};

class DegreesOfFreedomError : public DataError {
public:
    using DataError::DataError;
};

class SampleTooSmallError : public DataError {
public:
    using DataError::DataError;
};

// ---------------------------------------------------------------------------
// Numerical failures (CLI exit code 4)
// ---------------------------------------------------------------------------

class NumericalError : public Error {
public:
    using Error::Error;
};

class SingularDesignError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotPDError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class AsymmetricInputError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ZeroVarianceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularMomentError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class EigenvalueDomainError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class OrderUndeterminedError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace tsecon
