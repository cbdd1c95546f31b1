// Error taxonomy shared by all components.
#pragma once

#include <stdexcept>
#include <string>

namespace stripcolor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed geometry or unparseable data handed in by a caller.
struct InvalidInputError : Error {
    using Error::Error;
};

// A documented precondition of an operation was not met.
struct PreconditionError : Error {
    using Error::Error;
};

// An exact-search size cap was exceeded; never silently approximated.
struct ResourceLimitError : Error {
    using Error::Error;
};

// An internal invariant that must hold by construction was violated.
struct InvariantFailureError : Error {
    using Error::Error;
};

// An on-line colorer assigned a color conflicting with an intersecting object.
struct ImproperColoringError : Error {
    using Error::Error;
};

// Instance generation could not satisfy the requested constraints.
struct GenerationFailureError : Error {
    using Error::Error;
};

}  // namespace stripcolor
