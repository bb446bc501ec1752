#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A sequence or cell vector violates the creation-code invariants.
struct InvalidSequenceError : Error {
    using Error::Error;
};

// The operation needs a connected graph (or a code ending in a dominating
// vertex) and the input is not.
struct DisconnectedError : Error {
    using Error::Error;
};

// A perturbation scheme has no legal neighbour for this state.
struct NoNeighborsError : Error {
    using Error::Error;
};

// Two graphs passed to a distance function differ in vertex count.
struct SizeMismatchError : Error {
    using Error::Error;
};

// Walk-based quantities need at least one edge.
struct NoEdgesError : Error {
    using Error::Error;
};

// Entropy of an edgeless graph is undefined.
struct EmptyGraphError : Error {
    using Error::Error;
};

// An integer index overflowed the 64-bit result type.
struct OverflowError : Error {
    using Error::Error;
};

// Malformed edge-list input. `line` is 1-based, 0 when not tied to a line.
struct ParseError : Error {
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line(line) {}
    int line = 0;
};

struct SelfLoopError : ParseError {
    using ParseError::ParseError;
};

struct EmptyInputError : ParseError {
    using ParseError::ParseError;
};

}  // namespace nsg
