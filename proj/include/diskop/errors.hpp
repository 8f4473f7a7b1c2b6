#pragma once

#include <stdexcept>
#include <string>

namespace diskop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Singular integrand whose exponent makes it non-integrable.
class NonIntegrableError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Series or integral that does not converge for the given parameters.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Requested accuracy could not be reached; carries the best value found.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, double best_value, double best_bound)
        : Error(what), best_value_(best_value), best_bound_(best_bound) {}

    double best_value() const noexcept { return best_value_; }
    double best_bound() const noexcept { return best_bound_; }

private:
    double best_value_;
    double best_bound_;
};

/// Integrand returned a non-finite value at a quadrature node.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// Quadrature rule or strategy unsuitable for the request.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Norm query that has no catalog entry.
class UnsupportedQueryError : public Error {
public:
    using Error::Error;
};

}  // namespace diskop
