#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mta {

enum class ErrorCode {
    TooShort,
    NonFinite,
    ZeroVariance,
    InvalidAlphabet,
    InvalidParams,
    OutOfRange,
    GenerationTooLong,
    GenerationMismatch,
    TooLarge,
    IOError,
    SubsetOutOfRange,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::GenerationTooLong: return "GenerationTooLong";
    case ErrorCode::GenerationMismatch: return "GenerationMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::SubsetOutOfRange: return "SubsetOutOfRange";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mta
