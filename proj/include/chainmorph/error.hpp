#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chainmorph {

enum class ErrorKind {
    EmptySet,
    NotOrientationPreserving,
    ConstantMap,
    NotAnIdeal,
    ChainMismatch,
    NotInjective,
    NotIdempotent,
    NotFull,
    SizeLimit,
    ClosureViolation,
    EmptyImage,
    CriterionFails,
    UnsupportedShape,
    MalformedMap,
    KernelMismatch,
    NotInClass,
    UnboundedUnsupported,
    BadInterval,
    UnknownSuite,
    ParseError,
};

inline std::string_view kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotOrientationPreserving: return "NotOrientationPreserving";
    case ErrorKind::ConstantMap: return "ConstantMap";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::ChainMismatch: return "ChainMismatch";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::EmptyImage: return "EmptyImage";
    case ErrorKind::CriterionFails: return "CriterionFails";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::MalformedMap: return "MalformedMap";
    case ErrorKind::KernelMismatch: return "KernelMismatch";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::UnboundedUnsupported: return "UnboundedUnsupported";
    case ErrorKind::BadInterval: return "BadInterval";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind), message_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

} // namespace chainmorph
