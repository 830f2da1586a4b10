#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ladic {

enum class ErrorKind {
    // padic_core
    PrecisionExhausted,
    DivisionByZero,
    WrongExtensionKind,
    OutOfRange,
    // tate_series
    DimensionMismatch,
    DenominatorIndistinguishableFromZero,
    NotDiagonal,
    PrecisionBudgetExceeded,
    HypothesisViolated,
    RankUncertain,
    Inconclusive,
    // formal_group
    FieldMismatch,
    FieldTooSmall,
    PrecisionUncertain,
    NonTorsionInput,
    RadiusViolation,
    // mellin_torus
    NonCommuting,
    NonInvertible,
    BudgetExceeded,
    // cli
    MalformedInput,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// True for the kinds that mean "undecided at this precision or budget",
// as opposed to a disproved statement or malformed input.
bool is_precision_kind(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what)
{
    if (!cond) fail(kind, what);
}

} // namespace ladic
