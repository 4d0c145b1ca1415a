#pragma once

#include <stdexcept>
#include <string>

namespace padyn {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The provable absolute precision of a result fell below what the caller
// requested; carries the orbit/iteration index where the budget died when
// that is meaningful (-1 otherwise).
struct PrecisionExhausted : Error {
    long index;
    explicit PrecisionExhausted(const std::string& msg, long at = -1)
        : Error(msg), index(at) {}
};

struct DivisionByZero : Error {
    using Error::Error;
};

// A value with negative valuation was used where an element of the ring of
// integers was required.
struct NotIntegral : Error {
    using Error::Error;
};

struct InsufficientPrecision : Error {
    using Error::Error;
};

struct MalformedLiteral : Error {
    using Error::Error;
};

struct DenominatorNotPPower : Error {
    using Error::Error;
};

struct MalformedWindow : Error {
    using Error::Error;
};

struct EmptyForwardPart : Error {
    using Error::Error;
};

struct NotInUnitPolydisc : Error {
    using Error::Error;
};

struct DepthInsufficient : Error {
    using Error::Error;
};

struct DegenerateSeries : Error {
    using Error::Error;
};

struct RecursionBudgetExceeded : Error {
    using Error::Error;
};

// The residue equation handed to the digit solver is inconsistent.  Cannot
// happen for inputs satisfying the documented preconditions; raised as an
// internal error if it ever does.
struct NoSolutionInDisc : Error {
    using Error::Error;
};

struct ConfigInvalid : Error {
    using Error::Error;
};

// A membership question (typically "is this coordinate integral?") cannot be
// decided at the available precision.
struct Indeterminate : Error {
    using Error::Error;
};

// Certifies that the point is not in T^k(R^2): some backward iterate
// provably leaves the unit polydisc at step `step`.
struct ExitsUnitPolydisc : Error {
    int step;
    explicit ExitsUnitPolydisc(int k)
        : Error("backward iterate leaves the unit polydisc at step " + std::to_string(k)),
          step(k) {}
};

}  // namespace padyn
