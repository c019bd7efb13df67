#pragma once

#include <stdexcept>
#include <string>

namespace snyder {

// Every failure mode the library can signal. CLI maps these to exit codes:
// configuration mistakes exit 2, computational failures exit 1.
enum class ErrorCode {
    NonPositiveOmega,
    NonPositiveMass,
    NegativeL,
    CutoffRegime,
    StepTooLarge,
    IncompleteOrbit,
    NonUniformSampling,
    DimTooSmall,
    NotSymmetric,
    ConvergenceFailure,
    GridTooCoarse,
    DomainTooSmall,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveOmega:   return "NonPositiveOmega";
        case ErrorCode::NonPositiveMass:    return "NonPositiveMass";
        case ErrorCode::NegativeL:          return "NegativeL";
        case ErrorCode::CutoffRegime:       return "CutoffRegime";
        case ErrorCode::StepTooLarge:       return "StepTooLarge";
        case ErrorCode::IncompleteOrbit:    return "IncompleteOrbit";
        case ErrorCode::NonUniformSampling: return "NonUniformSampling";
        case ErrorCode::DimTooSmall:        return "DimTooSmall";
        case ErrorCode::NotSymmetric:       return "NotSymmetric";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::GridTooCoarse:      return "GridTooCoarse";
        case ErrorCode::DomainTooSmall:     return "DomainTooSmall";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace snyder
