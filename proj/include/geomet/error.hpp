#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geomet {

enum class ErrorCode {
    ParseError,
    InvalidGraph,
    InvalidPath,
    DisconnectedInput,
    TooSmall,
    TooLarge,
    PatternTooLarge,
    MissingEdge,
    CycleComponent,
    InconsistentInput,
    NonPersistentEdge,
    NotNeighborly,
    NotInducedSubgraph,
    NotACycle,
    CrossingViolation,
    EvenLength,
    NotStrictlyInducing,
    QuotientNotStrict,
    PreconditionViolated,
    EmptyFiber,
    NotOuterplanar,
    NotBiconnected,
    CorruptData,
    ResolutionTooLow,
    ResolutionMismatch,
    NonPositiveDerivative,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace geomet
