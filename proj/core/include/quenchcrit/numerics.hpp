#pragma once

#include <Eigen/Dense>
#include <functional>

#include "quenchcrit/errors.hpp"

namespace quenchcrit::num {

/// Root bracket [lo, hi]; the target must change sign between the ends
/// (checked when the solver is invoked, not at construction).
struct Bracket {
    double lo;
    double hi;
};

/// Brent-style root finding: bisection with inverse-quadratic/secant
/// acceleration. Guaranteed to converge on a valid bracket; the result
/// always lies inside [b.lo, b.hi] and the final bracket width is <= tol.
///
/// Throws InvalidBracket when f(lo) and f(hi) have the same sign, and
/// NoConvergence after the iteration cap (the message reports the last
/// bracket).
double find_root(const std::function<double(double)>& f, Bracket b, double tol = 1e-12);

/// Central finite differences.
/// order 1: (f(x+h) - f(x-h)) / (2h)
/// order 2: (f(x+h) - 2 f(x) + f(x-h)) / h^2
double central_derivative(const std::function<double(double)>& f, double x, double h, int order = 1);

/// Adaptive Simpson quadrature with Richardson correction; `tol` is the
/// absolute error target. Throws NoConvergence when the refinement budget
/// (60 levels) is exhausted.
double adaptive_quadrature(const std::function<double(double)>& f, double lo, double hi, double tol);

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns
    int dim = 0;
};

/// Dense real-symmetric eigendecomposition. The input must be symmetric
/// within 1e-12 * max|H|; eigenvalues come back ascending with orthonormal
/// column eigenvectors (reconstruction residual <= 1e-9 * max|H|).
SpectralDecomposition eigh(const Eigen::MatrixXd& h);

} // namespace quenchcrit::num
