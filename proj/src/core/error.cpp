#include "ladic/core/error.hpp"

namespace ladic {

std::string_view error_kind_name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::WrongExtensionKind: return "WrongExtensionKind";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DenominatorIndistinguishableFromZero: return "DenominatorIndistinguishableFromZero";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::PrecisionBudgetExceeded: return "PrecisionBudgetExceeded";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::RankUncertain: return "RankUncertain";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::PrecisionUncertain: return "PrecisionUncertain";
    case ErrorKind::NonTorsionInput: return "NonTorsionInput";
    case ErrorKind::RadiusViolation: return "RadiusViolation";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

bool is_precision_kind(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::DenominatorIndistinguishableFromZero:
    case ErrorKind::PrecisionBudgetExceeded:
    case ErrorKind::RankUncertain:
    case ErrorKind::Inconclusive:
    case ErrorKind::PrecisionUncertain:
    case ErrorKind::BudgetExceeded:
        return true;
    default:
        return false;
    }
}

} // namespace ladic
