#pragma once

#include <stdexcept>
#include <string>

namespace quenchcrit {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Root bracket does not satisfy lo < hi with a sign change of f.
class InvalidBracket : public Error {
public:
    using Error::Error;
};

/// An iterative scheme exhausted its budget (root, quadrature or eigensolve).
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// |d2Phi/dz2| vanished at the saddle: the Gaussian prefactor of the
/// partition function is singular exactly on the critical line.
class DegenerateSaddle : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

/// Boson cutoff required but not supplied for a cavity-model matrix.
class CutoffMissing : public Error {
public:
    using Error::Error;
};

/// Cutoff doubling search exceeded its cap; parameters are too deep in the
/// ordered phase for the exact solver.
class CutoffExplosion : public Error {
public:
    using Error::Error;
};

/// A dense block would exceed the configured matrix-size cap.
class DimensionGuard : public Error {
public:
    using Error::Error;
};

/// Initial and final Hamiltonians do not share a Hilbert space.
class MismatchedSpaces : public Error {
public:
    using Error::Error;
};

/// Bad sweep/CLI configuration (maps to process exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace quenchcrit
