#pragma once

#include <stdexcept>
#include <string>

namespace wps {

/// Typed domain errors. The CLI maps code_name() into machine-readable
/// error JSON; library callers can switch on code().
enum class ErrorCode {
    NotWellFormed,
    TooFewVariables,
    SyntaxError,
    DegreeMismatch,
    UnknownVariable,
    GradingViolation,
    IndexOutOfRange,
    ZeroPolynomial,
    ResourceLimit,
    NonHomogeneousInput,
    NoMinWeightSpace,
    UnsupportedPositiveDimensionalZmin,
    CStarFails,
    EmptyLinearSystem,
    DimensionNot2,
    IOError,
    BadPrime,
    NotCartierDegree,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotWellFormed: return "NotWellFormed";
        case ErrorCode::TooFewVariables: return "TooFewVariables";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::GradingViolation: return "GradingViolation";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::NonHomogeneousInput: return "NonHomogeneousInput";
        case ErrorCode::NoMinWeightSpace: return "NoMinWeightSpace";
        case ErrorCode::UnsupportedPositiveDimensionalZmin:
            return "UnsupportedPositiveDimensionalZmin";
        case ErrorCode::CStarFails: return "CStarFails";
        case ErrorCode::EmptyLinearSystem: return "EmptyLinearSystem";
        case ErrorCode::DimensionNot2: return "DimensionNot2";
        case ErrorCode::IOError: return "IOError";
        case ErrorCode::BadPrime: return "BadPrime";
        case ErrorCode::NotCartierDegree: return "NotCartierDegree";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace wps
