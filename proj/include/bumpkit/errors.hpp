#pragma once

#include <stdexcept>
#include <string>

namespace bumpkit {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text is not a sequence of integer tokens.
struct MalformedInput : Error {
    using Error::Error;
};

// Values are not a bijection on {1..n} (duplicates, gaps, out of range).
struct NotAPermutation : Error {
    using Error::Error;
};

// Cell coordinates fall outside the partition shape.
struct CellOutsideShape : Error {
    using Error::Error;
};

// An exhaustive enumeration was requested beyond its configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

// Insertion of a value already present in the tableau.
struct DuplicateEntry : Error {
    using Error::Error;
};

// P and Q do not have the same shape.
struct ShapeMismatch : Error {
    using Error::Error;
};

// A tableau is not standard on {1..n}.
struct NotStandard : Error {
    using Error::Error;
};

// A sequence violates the weak ballot prefix inequality.
struct NotABallotSequence : Error {
    using Error::Error;
};

// Internal consistency failure (e.g. an inexact division that must be exact).
struct InternalError : Error {
    using Error::Error;
};

// Failure writing an output file.
struct IoError : Error {
    using Error::Error;
};

} // namespace bumpkit
