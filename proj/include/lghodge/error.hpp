#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lghodge {

enum class ErrorCode {
    DegenerateInput,
    Overflow,
    NotReflexive,
    InvalidPair,
    NotOnBoundary,
    DegenerateFace,
    InvalidParameter,
    MalformedHeader,
    MatrixShapeMismatch,
    NonInteger,
    WrongDimension,
    SchemaError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::MatrixShapeMismatch: return "MatrixShapeMismatch";
    case ErrorCode::NonInteger: return "NonInteger";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

// Every library failure is reported through this type; `code()` is stable,
// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace lghodge
