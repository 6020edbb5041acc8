#pragma once

#include <stdexcept>
#include <string>

namespace rwa {

// Incompatible matrix/vector dimensions. Message names both shapes.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A word refers to a letter that is not in the automaton's alphabet.
struct AlphabetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A component violates a construction invariant (non-total table, duplicate
// vector states, mismatched dimensions, ...). Message carries the field path
// when raised by the document parser.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed document text. Message carries the location.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called on a result that does not satisfy its
// precondition (e.g. a budget-exhausted closure where a complete one is
// required).
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace rwa
