#pragma once

#include <stdexcept>
#include <string>

namespace floer {

// Base class for every domain error raised by the library. The CLI maps
// these to exit code 1; command-line usage errors never reach this type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input has the wrong number of coordinates / incompatible chain dimension.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

// Coordinate or matrix index out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

// Operation only defined for a parity (or range) of k the caller violated.
class UnsupportedDimensionError : public Error {
public:
    using Error::Error;
};

// Requested object would exceed the dense desk-scale limits.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Homology requested where the differential does not square to zero.
// Carries (k+1) mod 2, the coefficient of the identity in d^2.
class ObstructionError : public Error {
public:
    ObstructionError(const std::string& msg, int square_coefficient)
        : Error(msg), square_coefficient_(square_coefficient) {}
    int square_coefficient() const { return square_coefficient_; }

private:
    int square_coefficient_;
};

// Chain fed to the block decomposition does not project to a cycle.
class NotInPreimageError : public Error {
public:
    using Error::Error;
};

// Argument outside an operation's stated domain (e.g. a non-cycle where a
// cycle is required).
class DomainConstraintError : public Error {
public:
    using Error::Error;
};

// Series arithmetic lost the leading coefficients: the result cannot be
// normalized within the precision window. Retry with a larger window.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Division by (or inversion of) the zero series.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

// Boundary sampling too coarse to track the winding argument.
class ResolutionError : public Error {
public:
    using Error::Error;
};

// Quadrature failed to converge across grid refinements.
class AccuracyError : public Error {
public:
    using Error::Error;
};

// An internally asserted identity failed; indicates a bug, not bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace floer
