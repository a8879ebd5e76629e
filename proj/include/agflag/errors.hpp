#pragma once

#include <stdexcept>

namespace agflag {

/// Error hierarchy for the library. Every failure mode has its own type so
/// callers can catch precisely; all derive from std::exception via the
/// standard categories.

struct NotPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Signals an internal bug: an irreducible polynomial exists for every
// valid (p, k) pair.
struct NoIrreducibleError : std::logic_error {
    using std::logic_error::logic_error;
};

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotSeparableOrNotSplitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GcdViolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegreeOutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LengthTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PoleAtPointError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DegreeTooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLargeToEnumerateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InconclusiveSearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BOutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace agflag
