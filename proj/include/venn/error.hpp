#pragma once

#include <stdexcept>
#include <string>

namespace venn {

enum class ErrorKind {
    NotHypercubeEdge,
    NotLexMin,
    DimensionTooSmall,
    BadLabelLength,
    NotSpanning,
    NotConnected,
    NonQuadFace,
    HalfspaceDisconnected,
    MultiEdge,
    InvalidEmbedding,
    BoundaryMismatch,
    MalformedGraph6,
    LabelRecoveryFailed,
    MalformedBinary,
    VersionMismatch,
    NotBipartite,
    HasPerfectMatching,
    NotHamiltonian,
    NotALadder,
    NotDisjoint,
    NoViolatorFound,
    InconsistentSignature,
    NotIndependent,
    MissingPriorCensus,
    StageDependency,
    Io,
};

const char* error_kind_name(ErrorKind kind);

class VennError : public std::runtime_error {
public:
    VennError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace venn
