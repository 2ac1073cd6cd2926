#pragma once

#include <stdexcept>

namespace minregret {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values that must share a dimension do not.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An instance or input file violates a data invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The feasible set of a problem is empty, or a solution is not a member of it.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// An enumeration or table exceeded its configured size cap.
class SizeCapError : public Error {
public:
    using Error::Error;
};

/// A caller-side contract was violated (bad argument combination).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal algorithm invariant failed; indicates a bug, never bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// The solver loop exceeded its iteration limit; indicates a bug, never bad input.
class IterationLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace minregret
