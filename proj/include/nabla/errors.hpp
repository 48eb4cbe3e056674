#pragma once

#include <stdexcept>
#include <string>

namespace nabla {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point lies outside a function's grid, or a grid is too short for the
/// requested operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input data (bad order, non-positive p, dependent boundary rows, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The D-matrix of a boundary value problem is numerically singular.
class NearSingular : public Error {
public:
    using Error::Error;
};

/// b - a - H_nu(b, a) vanishes for the closed-form conjugate Green's function.
class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

/// Dense elimination hit a pivot below the singularity threshold.
class SingularSystem : public Error {
public:
    using Error::Error;
};

}  // namespace nabla
