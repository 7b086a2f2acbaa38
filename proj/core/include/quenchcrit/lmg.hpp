#pragma once

#include <complex>
#include <optional>

#include "quenchcrit/types.hpp"

namespace quenchcrit::lmg {

/// Lipkin-Meshkov-Glick parameters: H = -chi Jz - Jx^2 / N.
struct LmgParams {
    double chi = 0.5;          // field strength, >= 0
    double temperature = 0.2;  // > 0
    int n_spins = 100;

    double beta() const { return 1.0 / temperature; }
    void validate() const;
};

enum class LmgPhase { PP, FP };

/// Mean-field solution. In the paramagnetic phase omega_mf = 0 and
/// theta0 = chi/2; in the ferromagnetic phase s = 2*theta0 solves
/// s = tanh(beta s / 2) on (chi, 1) and omega_mf = sqrt(s^2 - chi^2).
struct LmgPhasePoint {
    LmgPhase label = LmgPhase::PP;
    double omega_mf = 0.0;
    double theta0 = 0.0;
};

/// Theta_x = sqrt((chi + x)^2 + omega_mf^2) / 2.
double theta_x(double x, double chi, double omega_mf);

/// chi/(2 artanh chi) for 0 < chi < 1; 1/2 at chi = 0 (the limit); empty
/// for chi >= 1.
std::optional<double> critical_temperature(double chi);

/// Inverse boundary curve: the root of chi = tanh(chi/(2T)) in (0, 1) for
/// T < 1/2, empty otherwise.
std::optional<double> critical_chi(double temperature);

LmgPhasePoint solve_omega_mf(const LmgParams& p);

/// ln Z = N ln[2 cosh(beta Theta_0)] (mean-field partition function).
double log_partition(const LmgParams& p);

/// ln G(u) for the sudden quench chi -> chi + delta with the mean field
/// frozen at its pre-quench value. Evaluated with exponentially scaled
/// complex trigonometry so the N-th power never overflows.
std::complex<double> log_characteristic_function(std::complex<double> u, const LmgParams& p,
                                                 const QuenchSpec& q);

std::complex<double> characteristic_function(std::complex<double> u, const LmgParams& p,
                                             const QuenchSpec& q);

/// <W> = -N chi delta tanh(Theta_0/T) / (4 Theta_0).
double average_work(const LmgParams& p, const QuenchSpec& q);

/// G(i beta) Z_i / Z_f with the frozen-field Z_f; equal to one up to
/// rounding for every parameter choice (exact in the mean-field theory).
double jarzynski_ratio(const LmgParams& p, const QuenchSpec& q);

/// beta^2 d2(ln Z)/dbeta2 / N, stencil width 1e-4*beta.
double specific_heat_fd(const LmgParams& p);

} // namespace quenchcrit::lmg
