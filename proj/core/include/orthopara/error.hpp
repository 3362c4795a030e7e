#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orthopara {

enum class ErrorCode {
    // level-table ingestion
    UnknownUnit,
    MalformedTerm,
    MalformedJ,
    NegativeEnergy,
    MalformedRow,
    // argument validation
    NonPositiveLifetime,
    NonPositiveBroadening,
    NotNormalized,
    WeightOutOfRange,
    NonPositiveRate,
    NegativeRate,
    NonPositiveWindow,
    NegativeTime,
    ZeroWindows,
    EmptySample,
    InsufficientSupport,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base class for every error raised on a violated precondition or bad input.
class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// A postcondition or internal consistency check failed.  Distinct from
/// Error: this indicates a bug, not bad input.
class InvariantViolation : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

struct RowError
{
    std::size_t line = 0;  // 1-based line number in the source
    ErrorCode code = ErrorCode::MalformedRow;
    std::string message;
};

/// Raised by the level-table parser.  Carries every rejected row, not just
/// the first.
class ParseError : public Error
{
  public:
    explicit ParseError(std::vector<RowError> rows);

    const std::vector<RowError>& rows() const noexcept { return rows_; }

  private:
    std::vector<RowError> rows_;
};

}  // namespace orthopara
