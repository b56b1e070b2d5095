#pragma once

#include <stdexcept>
#include <string>

namespace crdyn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input (bad JSON, missing fields, wrong types).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates a domain constraint.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// A point index or coordinate outside the carrier.
class OutOfRange : public ConstraintError {
public:
    using ConstraintError::ConstraintError;
};

/// An orbit cannot be extended: the last point has no successor.
class DeadEnd : public Error {
public:
    using Error::Error;
};

/// An exhaustive procedure would exceed its configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A precondition of a structural shortcut does not hold.
class HypothesisViolated : public ConstraintError {
public:
    using ConstraintError::ConstraintError;
};

} // namespace crdyn
