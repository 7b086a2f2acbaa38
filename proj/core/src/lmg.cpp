#include "quenchcrit/lmg.hpp"

#include <cmath>
#include <stdexcept>

#include "quenchcrit/errors.hpp"
#include "quenchcrit/numerics.hpp"

namespace quenchcrit::lmg {

namespace {

double ln_2cosh(double x) {
    const double a = std::fabs(x);
    return a + std::log1p(std::exp(-2.0 * a));
}

// cos(z) e^{-m} and sin(z) e^{-m} with m >= |Im z|, so every exponential
// stays bounded regardless of how far z sits off the real axis.
std::complex<double> scaled_cos(std::complex<double> z, double m) {
    const std::complex<double> i(0.0, 1.0);
    return 0.5 * (std::exp(i * z - m) + std::exp(-i * z - m));
}

std::complex<double> scaled_sin(std::complex<double> z, double m) {
    const std::complex<double> i(0.0, 1.0);
    return (std::exp(i * z - m) - std::exp(-i * z - m)) / (2.0 * i);
}

} // namespace

void LmgParams::validate() const {
    if (!(chi >= 0.0)) throw std::invalid_argument("LmgParams: chi must be >= 0");
    if (!(temperature > 0.0)) throw std::invalid_argument("LmgParams: temperature must be > 0");
    if (n_spins < 1) throw std::invalid_argument("LmgParams: n_spins must be positive");
}

double theta_x(double x, double chi, double omega_mf) {
    return 0.5 * std::hypot(chi + x, omega_mf);
}

std::optional<double> critical_temperature(double chi) {
    if (!(chi >= 0.0)) throw std::invalid_argument("critical_temperature: chi must be >= 0");
    if (chi >= 1.0) return std::nullopt;
    if (chi == 0.0) return 0.5;  // limit of chi/(2 artanh chi)
    return chi / (2.0 * std::atanh(chi));
}

std::optional<double> critical_chi(double temperature) {
    if (!(temperature > 0.0)) throw std::invalid_argument("critical_chi: temperature must be > 0");
    if (temperature >= 0.5) return std::nullopt;  // slope at the origin below one
    const double beta = 1.0 / temperature;
    const auto f = [&](double chi) { return std::tanh(0.5 * beta * chi) - chi; };
    return num::find_root(f, {1e-12, 1.0}, 1e-14);
}

LmgPhasePoint solve_omega_mf(const LmgParams& p) {
    p.validate();
    const auto tc = critical_temperature(p.chi);
    if (!tc || p.temperature > *tc) {
        return {LmgPhase::PP, 0.0, 0.5 * p.chi};
    }
    // FP: solve s = tanh(beta s / 2) for s = 2 Theta0 on (chi, 1); the
    // bracket excludes the trivial root at s = chi only when chi > 0.
    const double beta = p.beta();
    const auto f = [&](double s) { return std::tanh(0.5 * beta * s) - s; };
    const double lo = p.chi + 1e-15;
    double s = p.chi;
    if (f(lo) > 0.0) {
        s = num::find_root(f, {lo, 1.0}, 1e-15);
    }
    // else: at the critical line itself the two branches coincide (omega = 0)
    const double omega = std::sqrt(std::max(s * s - p.chi * p.chi, 0.0));
    return {LmgPhase::FP, omega, 0.5 * s};
}

double log_partition(const LmgParams& p) {
    const auto pt = solve_omega_mf(p);
    return p.n_spins * (ln_2cosh(p.beta() * pt.theta0));
}

std::complex<double> log_characteristic_function(std::complex<double> u, const LmgParams& p,
                                                 const QuenchSpec& q) {
    p.validate();
    const auto pt = solve_omega_mf(p);  // frozen at the initial field
    const double beta = p.beta();
    const double th0 = pt.theta0;
    const double thd = theta_x(q.delta, p.chi, pt.omega_mf);
    const double n = p.n_spins;
    const std::complex<double> w = u - std::complex<double>(0.0, beta);

    if (th0 < 1e-300) {
        // chi = 0 in the paramagnetic phase: the brace collapses to 2 cos(u Theta_d)
        const double md = std::fabs(u.imag()) * thd;
        return n * (md + std::log(2.0 * scaled_cos(u * thd, md)) - std::log(2.0));
    }

    const double md = std::fabs(u.imag()) * thd;
    const double m0 = std::fabs(w.imag()) * th0;
    const double ratio = (4.0 * th0 * th0 + p.chi * q.delta) / (4.0 * th0 * thd);
    const std::complex<double> brace =
        2.0 * scaled_cos(u * thd, md) * scaled_cos(w * th0, m0) +
        2.0 * scaled_sin(u * thd, md) * scaled_sin(w * th0, m0) * ratio;
    return n * (md + m0 + std::log(brace) - ln_2cosh(beta * th0));
}

std::complex<double> characteristic_function(std::complex<double> u, const LmgParams& p,
                                             const QuenchSpec& q) {
    return std::exp(log_characteristic_function(u, p, q));
}

double average_work(const LmgParams& p, const QuenchSpec& q) {
    p.validate();
    const auto pt = solve_omega_mf(p);
    if (pt.theta0 == 0.0) return 0.0;  // chi = 0, free spins
    return -p.n_spins * p.chi * q.delta * std::tanh(pt.theta0 / p.temperature) /
           (4.0 * pt.theta0);
}

double jarzynski_ratio(const LmgParams& p, const QuenchSpec& q) {
    const auto pt = solve_omega_mf(p);
    const double beta = p.beta();
    const std::complex<double> ln_g =
        log_characteristic_function(std::complex<double>(0.0, beta), p, q);
    const double ln_zi = log_partition(p);
    // Z_f with the mean field frozen at its pre-quench value
    const double ln_zf = p.n_spins * ln_2cosh(beta * theta_x(q.delta, p.chi, pt.omega_mf));
    return std::exp(ln_g.real() + ln_zi - ln_zf);
}

double specific_heat_fd(const LmgParams& p) {
    p.validate();
    const double beta = p.beta();
    const auto ln_z = [&](double b) {
        LmgParams q = p;
        q.temperature = 1.0 / b;
        return log_partition(q);
    };
    const double d2 = num::central_derivative(ln_z, beta, 1e-4 * beta, 2);
    return beta * beta * d2 / p.n_spins;
}

} // namespace quenchcrit::lmg
