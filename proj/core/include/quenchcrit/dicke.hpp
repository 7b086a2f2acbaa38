#pragma once

#include <complex>
#include <optional>

#include "quenchcrit/types.hpp"

namespace quenchcrit::dicke {

/// Dicke model parameters in dimensionless units (k_B = hbar = 1):
/// H = epsilon Jz + omega a'a + (2 gamma / sqrt(N)) Jx (a' + a).
struct DickeParams {
    double epsilon = 1.0;      // atomic splitting, > 0
    double omega = 1.0;        // cavity frequency, > 0
    double gamma = 1.0;        // atom-cavity coupling, >= 0
    double temperature = 1.0;  // > 0
    int n_atoms = 100;

    double beta() const { return 1.0 / temperature; }
    void validate() const;
};

enum class DickePhase { NP, SP };

/// Saddle of the free-energy potential. In the normal phase z0 = 0 and
/// eta = 1; in the superradiant phase eta solves the self-consistency
/// condition eta*eps*omega/(4 gamma^2) = tanh(beta*eta*eps/2) and
/// z0 = eps*sqrt(eta^2-1)/(4 gamma). xi = sqrt(eps^2 + 16 gamma^2 z0^2)
/// (= eps*eta at the saddle).
struct DickePhasePoint {
    DickePhase label = DickePhase::NP;
    double z0 = 0.0;
    double eta = 1.0;
    double xi = 0.0;
};

/// Thermal moments of the coupling operator v = (2/sqrt(N)) Jx (a'+a).
struct VMoments {
    double v_mean = 0.0;
    double v_sq_mean = 0.0;
};

/// Gaussian law of the sudden-quench work: mean = delta*vbar,
/// variance = delta^2 (v2bar - vbar^2) >= 0.
struct GaussianWorkLaw {
    double mean = 0.0;
    double variance = 0.0;
};

/// Free-energy potential Phi(z) = -beta omega z^2
///   + ln[2 cosh(beta/2 sqrt(eps^2 + 16 gamma^2 z^2))]. Even in z.
double phi_potential(double z, const DickeParams& p);

/// Closed-form d2Phi/dz2 (no finite differences).
double phi_second_derivative(double z, const DickeParams& p);

/// Critical temperature eps/(2 artanh(eps*omega/4 gamma^2)); empty when
/// eps*omega/(4 gamma^2) >= 1, i.e. gamma below the critical coupling
/// sqrt(eps*omega)/2 (normal phase at every T > 0).
std::optional<double> critical_temperature(double epsilon, double omega, double gamma);

DickePhasePoint saddle_point(const DickeParams& p);

/// ln Z in the Laplace (steepest-descent) form
///   N Phi(z0) + (1/2) ln[2 / (beta omega |d2Phi(z0)|)].
/// Throws DegenerateSaddle on the critical line where d2Phi(z0) -> 0.
double log_partition(const DickeParams& p);

/// ln Z by direct quadrature of sqrt(N/(pi beta omega)) Int dz e^{N Phi(z)},
/// the independent route against which the Laplace value is validated.
/// The improper integral is truncated at |z| = z0 + 20/sqrt(N beta omega).
double log_partition_quadrature(const DickeParams& p);

/// Closed-form specific heat per atom, kept verbatim:
///   (beta eps/2)^2 sech(beta xi0/2) {1 + 16 gamma^4/(eps^2 omega^2)
///     * tanh^2(beta xi0/2) / (1 - (2 beta gamma^2/omega) sech(beta xi0/2))
///     * [1 in NP, 0 in SP]}.
/// The finite-difference route below is the ground truth; see README.
double specific_heat_per_atom(const DickeParams& p);

/// beta^2 d2(ln Z)/dbeta2 / N with a central stencil of width 1e-4*beta.
double specific_heat_fd(const DickeParams& p);

VMoments v_moments(const DickeParams& p);

GaussianWorkLaw work_law(const DickeParams& p, const QuenchSpec& q);

/// G(u) = exp(i u delta vbar - u^2 delta^2 (v2bar - vbar^2) / 2); G(0) = 1.
std::complex<double> characteristic_function(std::complex<double> u, const DickeParams& p,
                                             const QuenchSpec& q);

/// <W> = -4 N gamma delta z0^2 tanh(beta xi0/2) / xi0 (= delta * vbar).
/// Zero in the normal phase, strictly negative in the superradiant phase
/// for delta > 0.
double average_work(const DickeParams& p, const QuenchSpec& q);

/// <e^{-beta W + beta dF}> = G(i beta) Z(gamma) / Z(gamma + delta).
/// Throws DegenerateSaddle when either quench endpoint sits on the
/// critical line.
double jarzynski_ratio(const DickeParams& p, const QuenchSpec& q);

/// False when |delta|/gamma > 0.1, outside the linear-response regime the
/// Gaussian work law assumes. Callers (the CLI) warn but proceed.
bool quench_in_linear_regime(const DickeParams& p, const QuenchSpec& q);

} // namespace quenchcrit::dicke
