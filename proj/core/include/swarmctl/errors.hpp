#pragma once

#include <stdexcept>
#include <string>

namespace swarmctl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (e.g. a generating function evaluated at x > 1, a removal fraction p > 1).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input data violates a structural invariant (self-loop, duplicate edge,
/// malformed PMF, unparseable edge list, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The input is valid but exceeds the size an exhaustive or dense routine accepts.
class SizeError : public Error {
public:
    using Error::Error;
};

/// A fixed-point system could not be solved to the required residual.
class SolverError : public Error {
public:
    SolverError(const std::string& what, long iterations, double residual, double last_x)
        : Error(what), iterations_(iterations), residual_(residual), last_x_(last_x) {}

    long iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }
    double last_x() const noexcept { return last_x_; }

private:
    long iterations_;
    double residual_;
    double last_x_;
};

}  // namespace swarmctl
