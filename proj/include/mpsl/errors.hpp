#pragma once

#include <stdexcept>

namespace mpsl {

// Base class for every failure raised by this library.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed problem data: bad interval, out-of-range eta, unknown JSON keys, empty point list.
class StructuralError : public SolverError {
public:
    using SolverError::SolverError;
};

// Argument outside the mathematical domain of an operation (e.g. lambda <= 0, k < 0).
class DomainError : public SolverError {
public:
    using SolverError::SolverError;
};

// A scalar root search failed to bracket or refine its zero.
class ConvergenceError : public SolverError {
public:
    using SolverError::SolverError;
};

// The dispersion function of a separated problem had no sign change on its bracket.
class BracketError : public SolverError {
public:
    using SolverError::SolverError;
};

// The 2x2 phase Jacobian fell below the invertibility floor.
class SingularJacobian : public SolverError {
public:
    using SolverError::SolverError;
};

// Newton iteration exhausted its budget without meeting the residual target.
class NoConvergence : public SolverError {
public:
    using SolverError::SolverError;
};

// Homotopy step control underflowed or the phase left its admissible band.
class PathFailure : public SolverError {
public:
    using SolverError::SolverError;
};

// The tracked oscillation class changed along a homotopy path.
class ClassJump : public SolverError {
public:
    using SolverError::SolverError;
};

// The 2x2 correction system of the inverse operator is numerically singular.
class SingularSystem : public SolverError {
public:
    using SolverError::SolverError;
};

// The inverse operator was requested for a problem with alpha0- + alpha0+ = 0.
class NeumannCase : public SolverError {
public:
    using SolverError::SolverError;
};

}  // namespace mpsl
