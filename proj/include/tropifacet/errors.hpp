#pragma once

#include <stdexcept>
#include <string>

namespace tropifacet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched or unsupported dimensions (non-square matrix, wrong point size, ...).
struct DimensionError : Error {
    using Error::Error;
};

/// Malformed input: parse failures, inconsistent instances, invalid arguments.
struct ValidationError : Error {
    using Error::Error;
};

/// An operation was called outside its contract (e.g. a non-pure polytope).
struct PreconditionError : Error {
    using Error::Error;
};

/// A configured enumeration budget was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

/// General-position violation detected during facet enumeration.
struct DegeneracyError : Error {
    using Error::Error;
};

/// A cross-check between two independent computations failed, or a
/// paper-guaranteed property did not hold. Always an implementation bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace tropifacet
