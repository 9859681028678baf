#pragma once

#include <stdexcept>
#include <string>

namespace arcinv {

/// An input violates a documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structured input document could not be read.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant was violated; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The origin is not in the singular locus of a Rees algebra.
class NotInSingularLocus : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A step budget ran out before a result could be certified.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace arcinv
