#ifndef CELLALG_ERRORS_HPP
#define CELLALG_ERRORS_HPP

#include <stdexcept>

namespace cellalg {

/// Base class for every error this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions (or different fields).
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A linear system has no solution.
struct Inconsistent : Error {
    using Error::Error;
};

/// A square matrix has determinant zero in its field.
struct Singular : Error {
    using Error::Error;
};

/// No two-sided identity element solves the unit equations.
struct NoIdentity : Error {
    using Error::Error;
};

/// The trace Gram matrix (tau(a_i a_j)) is not invertible.
struct DegenerateTrace : Error {
    using Error::Error;
};

/// Cell-datum verification failed; cell modules are not available.
struct NotCellular : Error {
    using Error::Error;
};

/// Some Schur element vanishes; primitive idempotents do not exist.
struct NotSemisimple : Error {
    using Error::Error;
};

/// The two Higman-ideal expressions produced different subspaces.
struct HigmanFormsDisagree : Error {
    using Error::Error;
};

/// Character-sum and idempotent-relation Schur values disagree.
struct SchurCrossCheckFailed : Error {
    using Error::Error;
};

/// Gram-nonsingularity and Schur-nonvanishing disagree on semisimplicity.
struct SemisimpleCriteriaDisagree : Error {
    using Error::Error;
};

/// Malformed input text (carries position/field context in the message).
struct ParseError : Error {
    using Error::Error;
};

/// Well-formed input that violates a structural invariant.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace cellalg

#endif
