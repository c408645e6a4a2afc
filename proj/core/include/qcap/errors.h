#pragma once

#include <stdexcept>
#include <string>

namespace qcap {

/// Operand dimensions do not fit the operation.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A constructor argument violates the object's invariants.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Channel parameters lie outside the region where a result is proven.
struct RegimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A scalar argument lies outside the function's domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An input fails a numerical precondition (hermiticity, unit trace, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Derived quantities contradict a claimed property.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative routine failed to converge.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qcap
