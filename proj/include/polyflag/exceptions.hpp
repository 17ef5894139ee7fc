#ifndef POLYFLAG_EXCEPTIONS_HPP
#define POLYFLAG_EXCEPTIONS_HPP

#include <stdexcept>
#include <string>

namespace polyflag {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vectors of unequal length fed into a linear-algebra routine.
struct DimensionMismatchError : EngineError {
    using EngineError::EngineError;
};

/// Empty or otherwise malformed geometric input.
struct EmptyInputError : EngineError {
    using EngineError::EngineError;
};

/// An operation that requires the origin in the interior was given a
/// polytope where it is not, or a lower-dimensional polytope.
struct PropernessError : EngineError {
    using EngineError::EngineError;
};

/// A supplied point set is not contained in the polytope.
struct ContainmentError : EngineError {
    using EngineError::EngineError;
};

/// A 2-dimensional coordinate section is neither axis-aligned nor a
/// diamond, so the coordinate graph is not defined for this polytope.
struct GraphUndefinedError : EngineError {
    using EngineError::EngineError;
};

/// A rank-2 interval of a face lattice did not contain exactly two
/// middle faces; indicates a corrupted or miscomputed lattice.
struct LatticeCorruptionError : EngineError {
    using EngineError::EngineError;
};

/// A machine-checked statement that must hold for every valid input
/// failed.  Carries a human-readable witness description.
struct TheoremViolationError : EngineError {
    using EngineError::EngineError;
};

struct ParseError : EngineError {
    ParseError(const std::string& what, int line, int column)
        : EngineError(what + " (line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

struct IoError : EngineError {
    using EngineError::EngineError;
};

}  // namespace polyflag

#endif
