#pragma once

#include <stdexcept>
#include <string>

namespace bialg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// A tensor that must satisfy the Jacobi identity does not.
struct JacobiFailure : Error {
    using Error::Error;
};

// An operation that needs a Lie bracket was handed an uncertified tensor.
struct UncertifiedBracket : Error {
    using Error::Error;
};

// r-matrix with singular sharp map where invertibility is required.
struct DegenerateR : Error {
    using Error::Error;
};

// Hypothesis n∘r# = r#∘tn fails, so n·r would not be skew.
struct SkewSymmetryBroken : Error {
    using Error::Error;
};

// Hypothesis C(r,n) = 0 fails.
struct ConcomitantNonzero : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

struct UnknownName : Error {
    using Error::Error;
};

}  // namespace bialg
