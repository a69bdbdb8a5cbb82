#include "geomet/error.hpp"

namespace geomet {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::InvalidPath: return "InvalidPath";
        case ErrorCode::DisconnectedInput: return "DisconnectedInput";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::PatternTooLarge: return "PatternTooLarge";
        case ErrorCode::MissingEdge: return "MissingEdge";
        case ErrorCode::CycleComponent: return "CycleComponent";
        case ErrorCode::InconsistentInput: return "InconsistentInput";
        case ErrorCode::NonPersistentEdge: return "NonPersistentEdge";
        case ErrorCode::NotNeighborly: return "NotNeighborly";
        case ErrorCode::NotInducedSubgraph: return "NotInducedSubgraph";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::CrossingViolation: return "CrossingViolation";
        case ErrorCode::EvenLength: return "EvenLength";
        case ErrorCode::NotStrictlyInducing: return "NotStrictlyInducing";
        case ErrorCode::QuotientNotStrict: return "QuotientNotStrict";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::EmptyFiber: return "EmptyFiber";
        case ErrorCode::NotOuterplanar: return "NotOuterplanar";
        case ErrorCode::NotBiconnected: return "NotBiconnected";
        case ErrorCode::CorruptData: return "CorruptData";
        case ErrorCode::ResolutionTooLow: return "ResolutionTooLow";
        case ErrorCode::ResolutionMismatch: return "ResolutionMismatch";
        case ErrorCode::NonPositiveDerivative: return "NonPositiveDerivative";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace geomet
