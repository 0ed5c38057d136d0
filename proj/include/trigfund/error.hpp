#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigfund {

/// Failure categories shared by every module.
enum class ErrorCode {
    EvenOrTooSmallN,
    NonFiniteInput,
    IndexOutOfRange,
    BudgetTooLarge,
    DegenerateDenominator,
    GridMismatch,
    SingularSystem,
    InvalidArgument,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EvenOrTooSmallN: return "EvenOrTooSmallN";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BudgetTooLarge: return "BudgetTooLarge";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace trigfund
