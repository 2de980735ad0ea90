#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcurv {

enum class ErrorKind {
    ZeroDenominator,
    PoleEvaluation,
    OrderMismatch,
    NonUnitConstantTerm,
    ConstantTermNotOne,
    SquareRootViolation,
    IdentityViolation,
    InvalidN,
    UnsupportedDimension,
    InvalidOrder,
    SingularRecursion,
    NonPolynomialFamily,
    NonPolynomialResult,
    UnsupportedN,
    UnknownCheck,
    InadmissibleModel,
    ParseError,
    InvalidParameter,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::PoleEvaluation: return "PoleEvaluation";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorKind::SquareRootViolation: return "SquareRootViolation";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::SingularRecursion: return "SingularRecursion";
    case ErrorKind::NonPolynomialFamily: return "NonPolynomialFamily";
    case ErrorKind::NonPolynomialResult: return "NonPolynomialResult";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::InadmissibleModel: return "InadmissibleModel";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    }
    return "Unknown";
}

/// Every failure raised by the library. `kind()` identifies the contract
/// that was violated; the message carries the offending values.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace qcurv
