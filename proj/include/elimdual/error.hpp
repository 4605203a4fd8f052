#pragma once

#include <stdexcept>
#include <string>

namespace elimdual {

enum class ErrorCode {
    kDivisionByZero,
    kParse,
    kUnknownVariable,
    kUnknownConstraint,
    kDuplicateConstraint,
    kNegativeMultiplier,
    kBadRelation,
    kMissingValue,
    kNotStandardShape,
    kNotHomogeneous,
    kUnsignedVariable,
    kInfeasibleSystem,
    kUnbounded,
    kZeroPivotCoefficient,
    kZeroPivotRemainder,
    kInvalidCertificate,
    kNotParasite,
    kBadPivotRule,
    kBoundExceeded,
    kGeneratorExhausted,
    kInvalidArgument,
};

const char* to_string(ErrorCode code);

/// Every precondition failure in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace elimdual
