#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace iwasawa {

enum class ErrorCode {
    NotAUnit,
    PrecisionInconclusive,
    LevelMismatch,
    ShapeMismatch,
    NotContinuous,
    DegreeOverflow,
    SyntaxError,
    IndexError,
    RangeError,
    NotPrimitive,
    BudgetExceeded,
    ValidationError,
    IncompleteFactorBasis,
    NonDivisible,
    NotRational,
    NotStabilized,
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

/// Parse failure carrying the byte offset into the source text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::SyntaxError, "at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace iwasawa
