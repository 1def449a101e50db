#ifndef MVCHROMA_ERROR_HPP
#define MVCHROMA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvchroma {

enum class ErrorCode {
    OutOfRangeVertex,
    SelfLoop,
    DisconnectedGraph,
    UnreachablePair,
    ColoringNotTotal,
    ParseError,
    InvalidParams,
    SizeCapExceeded,
    InvalidQuasiLeaf,
    GapInput,
    ConstructionFailed,
    ClauseArityError,
    VariableOutOfRange,
    NonNormalizedInput,
    PartialAssignment,
    WrongColorCount,
    TooManyVariables,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::OutOfRangeVertex: return "OutOfRangeVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::UnreachablePair: return "UnreachablePair";
    case ErrorCode::ColoringNotTotal: return "ColoringNotTotal";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::InvalidQuasiLeaf: return "InvalidQuasiLeaf";
    case ErrorCode::GapInput: return "GapInput";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::ClauseArityError: return "ClauseArityError";
    case ErrorCode::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::NonNormalizedInput: return "NonNormalizedInput";
    case ErrorCode::PartialAssignment: return "PartialAssignment";
    case ErrorCode::WrongColorCount: return "WrongColorCount";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    }
    return "Unknown";
}

// Every library failure is reported through this type; the code is what
// callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mvchroma

#endif
