#pragma once

#include <stdexcept>
#include <string>

namespace kmf {

/// Base class for every error raised by the library. `exit_code()` is the
/// process exit status the CLI maps the error onto.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 1; }
};

/// Bad argument for an operation (index out of range, block size too big...).
class ParameterError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

/// (n, k) outside the supported domain: k < 3, n <= 2k, n > 64, or a count
/// that does not fit 64 bits.
class OutOfScopeError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// Partition plan whose sizes are not positive or do not sum to C(g, k).
class PlanError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

/// Hyperedge cap (or brute-force oracle cap) exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

/// An internal invariant of a construction failed. Firing is always a bug.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Malformed certificate: bad KSet, wrong arity, missing field.
class StructuralError : public Error {
public:
    using Error::Error;
};

} // namespace kmf
