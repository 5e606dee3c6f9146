#pragma once

#include <stdexcept>
#include <string>

namespace lrh {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument too close to a pole of a meromorphic function.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Argument outside the validity domain of an operation.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An adaptive scheme exhausted its budget before reaching the tolerance.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// A sign-change scan cannot separate two nearby zeros at the given step.
struct ResolutionError : Error {
    explicit ResolutionError(const std::string& msg) : Error(msg) {}
};

// Contour tracking failed (a zero sits on or too near the contour).
struct ContourError : Error {
    explicit ContourError(const std::string& msg) : Error(msg) {}
};

// Zero passed where a nonzero value is required (e.g. |0|_p).
struct ZeroInputError : Error {
    explicit ZeroInputError(const std::string& msg) : Error(msg) {}
};

// A coset table would exceed the desk-scale memory bound.
struct SizeError : Error {
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

// Two independent root-finding routes disagree beyond tolerance.
struct RootMismatchError : Error {
    explicit RootMismatchError(const std::string& msg) : Error(msg) {}
};

}  // namespace lrh
