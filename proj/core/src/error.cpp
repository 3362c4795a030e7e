#include "orthopara/error.hpp"

#include <sstream>

namespace orthopara {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::UnknownUnit: return "UnknownUnit";
    case ErrorCode::MalformedTerm: return "MalformedTerm";
    case ErrorCode::MalformedJ: return "MalformedJ";
    case ErrorCode::NegativeEnergy: return "NegativeEnergy";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::NonPositiveLifetime: return "NonPositiveLifetime";
    case ErrorCode::NonPositiveBroadening: return "NonPositiveBroadening";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::NonPositiveRate: return "NonPositiveRate";
    case ErrorCode::NegativeRate: return "NegativeRate";
    case ErrorCode::NonPositiveWindow: return "NonPositiveWindow";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::ZeroWindows: return "ZeroWindows";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::InsufficientSupport: return "InsufficientSupport";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

std::string describe(const std::vector<RowError>& rows)
{
    std::ostringstream os;
    os << rows.size() << " malformed row" << (rows.size() == 1 ? "" : "s");
    for (const auto& row : rows)
        os << "\n  line " << row.line << ": " << to_string(row.code) << ": " << row.message;
    return os.str();
}

ErrorCode first_code(const std::vector<RowError>& rows)
{
    return rows.empty() ? ErrorCode::MalformedRow : rows.front().code;
}

}  // namespace

ParseError::ParseError(std::vector<RowError> rows)
    : Error(first_code(rows), describe(rows)), rows_(std::move(rows))
{
}

}  // namespace orthopara
