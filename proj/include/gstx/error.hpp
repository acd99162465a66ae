#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gstx {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function or transform.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument sits on a pole (e.g. Gamma at a non-positive integer).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// No evaluation path is numerically safe near a pole of a connection formula.
class NearPoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

/// An integrand produced NaN or infinity at an interior node.
class NonFinite : public Error {
public:
    using Error::Error;
};

/// Parameters rejected by an identity's constraint predicate.
class ConstraintViolation : public Error {
public:
    using Error::Error;
};

/// Parse failure carrying the byte offset in the source text.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownFunction : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class ArityError : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

/// Runtime failure while evaluating an expression (ln of a negative, ...).
class EvalError : public Error {
public:
    using Error::Error;
};

}  // namespace gstx
