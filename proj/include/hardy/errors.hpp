#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Binary series operation on operands of different truncation orders.
class OrderMismatch : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain where the object is defined (|beta| >= 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at (or numerically at) a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Vanishing determinant or denominator in a parametrization.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// A map that was required to send the disc into itself does not.
class NotSelfMap : public Error {
public:
    using Error::Error;
};

/// A theorem hypothesis is violated by the supplied parameters.
class HypothesisError : public Error {
public:
    using Error::Error;
};

class NoInteriorFixedPoint : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

class EllipticAutomorphism : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

/// Malformed command-line value.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace hardy
