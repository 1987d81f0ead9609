#pragma once

#include <stdexcept>
#include <string>

namespace icg {

enum class ErrorKind {
    InvalidArgument,
    NonFinite,
    Duplicate,
    Degenerate,       // segment of zero length, tie on a projection, orthogonality
    NotConvex,
    NotOneSided,
    CrossingEdges,
    Disconnected,
    NonTriangularFace,
    VertexMismatch,
    SizeLimit,
    Parse,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace icg
