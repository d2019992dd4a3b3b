#ifndef XYRENYI_ERRORS_HPP
#define XYRENYI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xyrenyi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input lies on a critical line (h = 2 or gamma = 0) where k -> 1.
class CriticalPointError : public Error {
public:
    using Error::Error;
};

/// A series would need more terms than the hard cap allows.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// An asymptotic estimate was requested outside its validity window.
class GuardError : public Error {
public:
    using Error::Error;
};

/// Removable-looking singularity of a transformation (e.g. alpha tau0^2 = 1).
class SingularityError : public Error {
public:
    using Error::Error;
};

} // namespace xyrenyi

#endif
