#pragma once

#include <stdexcept>
#include <string>

namespace thresh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Division by an exact zero.
class ZeroDenominator : public Error {
public:
    using Error::Error;
};

/// A rational function was evaluated at one of its poles.
class PoleError : public Error {
public:
    using Error::Error;
};

class InterlacingViolation : public Error {
public:
    using Error::Error;
};

class InvalidDiagram : public Error {
public:
    using Error::Error;
};

class InvalidTableau : public Error {
public:
    using Error::Error;
};

/// Value outside the domain of an operation, e.g. inserting z outside [0,1].
class DomainError : public Error {
public:
    using Error::Error;
};

class NotACorner : public Error {
public:
    using Error::Error;
};

class CornerError : public Error {
public:
    using Error::Error;
};

class ConditionXViolation : public Error {
public:
    using Error::Error;
};

class GenericityViolation : public Error {
public:
    using Error::Error;
};

class SubsetSumZero : public Error {
public:
    using Error::Error;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

} // namespace thresh
