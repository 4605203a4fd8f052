#include "elimdual/error.hpp"

namespace elimdual {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::kDivisionByZero: return "division-by-zero";
        case ErrorCode::kParse: return "parse";
        case ErrorCode::kUnknownVariable: return "unknown-variable";
        case ErrorCode::kUnknownConstraint: return "unknown-constraint";
        case ErrorCode::kDuplicateConstraint: return "duplicate-constraint";
        case ErrorCode::kNegativeMultiplier: return "negative-multiplier";
        case ErrorCode::kBadRelation: return "bad-relation";
        case ErrorCode::kMissingValue: return "missing-value";
        case ErrorCode::kNotStandardShape: return "not-standard-shape";
        case ErrorCode::kNotHomogeneous: return "not-homogeneous";
        case ErrorCode::kUnsignedVariable: return "unsigned-variable";
        case ErrorCode::kInfeasibleSystem: return "infeasible-system";
        case ErrorCode::kUnbounded: return "unbounded";
        case ErrorCode::kZeroPivotCoefficient: return "zero-pivot-coefficient";
        case ErrorCode::kZeroPivotRemainder: return "zero-pivot-remainder";
        case ErrorCode::kInvalidCertificate: return "invalid-certificate";
        case ErrorCode::kNotParasite: return "not-parasite";
        case ErrorCode::kBadPivotRule: return "bad-pivot-rule";
        case ErrorCode::kBoundExceeded: return "bound-exceeded";
        case ErrorCode::kGeneratorExhausted: return "generator-exhausted";
        case ErrorCode::kInvalidArgument: return "invalid-argument";
    }
    return "unknown";
}

}  // namespace elimdual
