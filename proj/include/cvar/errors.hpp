#pragma once

#include <stdexcept>
#include <string>

namespace cvar {

// Error taxonomy. Io-class failures map to CLI exit code 1, everything
// else (data/model/numerics) to exit code 2.
enum class ErrorCode {
    Io,
    InvalidArgument,
    DuplicateYear,
    NonContiguousYears,
    UnknownColumn,
    NonNumericCell,
    MissingValue,
    MissingReference,
    InsufficientOverlap,
    BreakOutsideSample,
    InsufficientObservations,
    SingularMatrix,
    NonPositiveDefinite,
    DegenerateCorrelation,
    DegenerateResiduals,
    UseBootstrap,
    InfeasibleRestrictions,
    NonConvergence,
    I1ConditionFailed,
    NotControllable,
    PolicyDoesNotStabilize,
    NameMapIncomplete,
    WouldOverwrite,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    bool is_io() const noexcept { return code_ == ErrorCode::Io; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Io: return "Io";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DuplicateYear: return "DuplicateYear";
        case ErrorCode::NonContiguousYears: return "NonContiguousYears";
        case ErrorCode::UnknownColumn: return "UnknownColumn";
        case ErrorCode::NonNumericCell: return "NonNumericCell";
        case ErrorCode::MissingValue: return "MissingValue";
        case ErrorCode::MissingReference: return "MissingReference";
        case ErrorCode::InsufficientOverlap: return "InsufficientOverlap";
        case ErrorCode::BreakOutsideSample: return "BreakOutsideSample";
        case ErrorCode::InsufficientObservations: return "InsufficientObservations";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NonPositiveDefinite: return "NonPositiveDefinite";
        case ErrorCode::DegenerateCorrelation: return "DegenerateCorrelation";
        case ErrorCode::DegenerateResiduals: return "DegenerateResiduals";
        case ErrorCode::UseBootstrap: return "UseBootstrap";
        case ErrorCode::InfeasibleRestrictions: return "InfeasibleRestrictions";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::I1ConditionFailed: return "I1ConditionFailed";
        case ErrorCode::NotControllable: return "NotControllable";
        case ErrorCode::PolicyDoesNotStabilize: return "PolicyDoesNotStabilize";
        case ErrorCode::NameMapIncomplete: return "NameMapIncomplete";
        case ErrorCode::WouldOverwrite: return "WouldOverwrite";
    }
    return "Unknown";
}

}  // namespace cvar
