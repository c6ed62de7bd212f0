#pragma once

#include <stdexcept>
#include <string>

namespace zmono {

// Error taxonomy shared across the library.  Every recoverable failure is a
// DomainError tagged with one of these kinds; the CLI maps them to exit code 1.
enum class ErrorKind {
    DegenerateFace,
    DuplicateFace,
    EdgeDegreeViolation,
    Disconnected,
    VertexLinkNotSingleCycle,
    EdgeNotInFace,
    EdgeNotInTriangulation,
    FaceNotInTriangulation,
    NotLocallyZKnotted,
    InputNotZKnotted,
    Exhausted,
    IllegalFlip,
    LabelInUse,
    InvalidParameter,
    ValidationFailed,
    Unclassifiable,
    TrigParse,
};

const char* to_string(ErrorKind kind);

class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Invariant violations that signal a bug rather than bad input.
void internal_check(bool condition, const char* message);

}  // namespace zmono
