#pragma once

#include <stdexcept>
#include <string>

namespace onedep {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (order mismatch, index out of range, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

class NonInvertibleSeries : public Error {
public:
    using Error::Error;
};

class CompositionDomainError : public Error {
public:
    using Error::Error;
};

class ShiftDomainError : public Error {
public:
    using Error::Error;
};

/// Input does not satisfy the structural invariants of its type.
class ValidationError : public Error {
public:
    using Error::Error;
};

class DepthExceeded : public Error {
public:
    using Error::Error;
};

class SamplerUnavailable : public Error {
public:
    using Error::Error;
};

class EmptyTrials : public Error {
public:
    using Error::Error;
};

/// A computed quantity broke an invariant that holds for any correct implementation.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// Not thrown. Attached to results whose run probabilities cannot come from a
/// stationary 1-dependent process.
struct NotOneDependentWarning {
    std::string message;
};

}  // namespace onedep
