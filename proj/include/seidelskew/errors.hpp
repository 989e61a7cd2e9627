#pragma once

#include <stdexcept>
#include <string>

namespace seidelskew {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotATournament : Error {
    using Error::Error;
};
struct BadModulus : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct NotAlmostRegular : Error {
    using Error::Error;
};
struct NotDoublyRegular : Error {
    using Error::Error;
};
struct NotSkewHadamard : Error {
    using Error::Error;
};
struct NormalizationFailed : Error {
    using Error::Error;
};

/// A coefficient that must vanish by skew-symmetry is nonzero.
/// Signals an implementation bug, never bad input.
struct ImaginaryResidue : Error {
    using Error::Error;
};

struct GroupingAmbiguous : Error {
    using Error::Error;
};
struct PoleAtSample : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};

/// An empirical equivalence assertion failed during a search experiment.
/// Would falsify the implementation, not the underlying theorem.
struct CounterexampleFound : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace seidelskew
