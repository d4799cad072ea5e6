#pragma once

#include <stdexcept>
#include <string>

namespace apery {

// Base class for all evaluation failures raised by the library.
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : EvalError {
    using EvalError::EvalError;
};

struct NonFinite : EvalError {
    using EvalError::EvalError;
};

struct InvalidInput : EvalError {
    using EvalError::EvalError;
};

struct DomainError : EvalError {
    using EvalError::EvalError;
};

struct PoleError : EvalError {
    using EvalError::EvalError;
};

struct UnsupportedOrder : EvalError {
    using EvalError::EvalError;
};

struct RangeViolation : EvalError {
    using EvalError::EvalError;
};

} // namespace apery
