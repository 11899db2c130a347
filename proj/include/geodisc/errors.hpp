#pragma once

#include <stdexcept>
#include <string>

namespace geodisc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain of validity.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A boundary curve winds around the origin, so no continuous logarithm exists.
class WindingError : public PreconditionError {
public:
    WindingError(const std::string& what, int winding)
        : PreconditionError(what), winding_(winding) {}
    int winding() const noexcept { return winding_; }

private:
    int winding_;
};

/// An iterative solver failed to reach its tolerance.
class SolverDivergence : public Error {
public:
    SolverDivergence(const std::string& what, double last_residual)
        : Error(what), last_residual_(last_residual) {}
    double last_residual() const noexcept { return last_residual_; }

private:
    double last_residual_;
};

/// Input data violates a geometric hypothesis (e.g. a disc with non-positive
/// second order contact against the inner domain).
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

}  // namespace geodisc
