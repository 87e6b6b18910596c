#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace omega {

enum class ErrorKind {
    SymbolNotInAlphabet,
    EmptyAlphabet,
    NotStronglyConnected,
    Unreachable,
    EmptyInfinitySet,
    InconsistentPartialCondition,
    EmptySample,
    PreconditionViolated,
    InternalInconsistency,
    UnreachableState,
    NotIRC,
    UnsupportedType,
    UniverseTooLarge,
    AlphabetMismatch,
    InvalidCondition,
    InvalidArgument,
    ParseError,
    DisjointnessViolation,
    UnsupportedFeature,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type of the library; `kind()` tells callers what went wrong.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace omega
