#pragma once

#include <stdexcept>
#include <string>

namespace ellcond {

enum class ErrorCode {
    DimensionMismatch,
    NonSymmetric,
    NotPositiveDefinite,
    BadDegreesOfFreedom,
    ZeroWeightVector,
    NegativeArgument,
    ProbabilityOutOfRange,
    EmptySubset,
    DivergentIntegral,
    TooFewConditionedSamples,
    DegenerateConditionalVariance,
    NoConvergence,
    KOutOfRange,
    NonMonotoneObjective,
    CellTooSmall,
    ShapeMismatch,
    UnsupportedFamily,
    BadArgument,
    ParseError,
    IoError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonSymmetric: return "NonSymmetric";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::BadDegreesOfFreedom: return "BadDegreesOfFreedom";
        case ErrorCode::ZeroWeightVector: return "ZeroWeightVector";
        case ErrorCode::NegativeArgument: return "NegativeArgument";
        case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::DivergentIntegral: return "DivergentIntegral";
        case ErrorCode::TooFewConditionedSamples: return "TooFewConditionedSamples";
        case ErrorCode::DegenerateConditionalVariance: return "DegenerateConditionalVariance";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::NonMonotoneObjective: return "NonMonotoneObjective";
        case ErrorCode::CellTooSmall: return "CellTooSmall";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorCode::BadArgument: return "BadArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace ellcond
