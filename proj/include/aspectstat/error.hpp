#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aspectstat {

// Reason codes shared by every module. They double as the null-reason
// vocabulary written into cells.csv, so the string forms are stable.
enum class ErrorCode {
    NotTradingDay,
    InsufficientHistory,
    EmptyAlignment,
    FileNotFound,
    FormatError,
    HeaderMismatch,
    EmptySeries,
    DegenerateSeries,
    InsufficientData,
    RankDeficient,
    NonFinite,
    DegenerateSample,
    DomainError,
    ConfigError,
    IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace aspectstat
