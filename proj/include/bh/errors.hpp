#pragma once

#include <stdexcept>
#include <string>

namespace bh {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Grid validation failures: duplicate points, empty grid, bad multiplicities.
class GridError : public Error {
public:
    using Error::Error;
};

class DuplicatePointError : public GridError {
public:
    using GridError::GridError;
};

class EmptyGridError : public GridError {
public:
    using GridError::GridError;
};

class NonPositiveMultiplicityError : public GridError {
public:
    using GridError::GridError;
};

class NonFinitePointError : public GridError {
public:
    using GridError::GridError;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class InvalidPermutationError : public Error {
public:
    using Error::Error;
};

/// Numerical failures that make downstream results meaningless.
class NumericError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public NumericError {
public:
    using NumericError::NumericError;
};

class UnderflowToZeroError : public NumericError {
public:
    using NumericError::NumericError;
};

class OverflowToInfError : public NumericError {
public:
    using NumericError::NumericError;
};

class NonFiniteResultError : public NumericError {
public:
    using NumericError::NumericError;
};

class ZeroDenominatorError : public NumericError {
public:
    using NumericError::NumericError;
};

class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class FlushToZeroError : public Error {
public:
    using Error::Error;
};

}  // namespace bh
