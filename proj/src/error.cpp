#include "omega/error.hpp"

namespace omega {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SymbolNotInAlphabet: return "SymbolNotInAlphabet";
        case ErrorKind::EmptyAlphabet: return "EmptyAlphabet";
        case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
        case ErrorKind::Unreachable: return "Unreachable";
        case ErrorKind::EmptyInfinitySet: return "EmptyInfinitySet";
        case ErrorKind::InconsistentPartialCondition: return "InconsistentPartialCondition";
        case ErrorKind::EmptySample: return "EmptySample";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::UnreachableState: return "UnreachableState";
        case ErrorKind::NotIRC: return "NotIRC";
        case ErrorKind::UnsupportedType: return "UnsupportedType";
        case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
        case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorKind::InvalidCondition: return "InvalidCondition";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DisjointnessViolation: return "DisjointnessViolation";
        case ErrorKind::UnsupportedFeature: return "UnsupportedFeature";
    }
    return "Unknown";
}

}  // namespace omega
