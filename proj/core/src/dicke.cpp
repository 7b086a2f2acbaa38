#include "quenchcrit/dicke.hpp"

#include <cmath>
#include <stdexcept>

#include "quenchcrit/errors.hpp"
#include "quenchcrit/numerics.hpp"

namespace quenchcrit::dicke {

namespace {

// ln(2 cosh x), safe for large |x|.
double ln_2cosh(double x) {
    const double a = std::fabs(x);
    return a + std::log1p(std::exp(-2.0 * a));
}

double xi_of(double z, const DickeParams& p) { return std::hypot(p.epsilon, 4.0 * p.gamma * z); }

// Self-consistency residual for eta in the superradiant phase:
// eta*eps*omega/(4 gamma^2) - tanh(beta*eta*eps/2).
double eta_residual(double eta, const DickeParams& p) {
    return 0.25 * eta * p.epsilon * p.omega / (p.gamma * p.gamma) -
           std::tanh(0.5 * p.beta() * eta * p.epsilon);
}

} // namespace

void DickeParams::validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("DickeParams: epsilon must be > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("DickeParams: omega must be > 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("DickeParams: gamma must be >= 0");
    if (!(temperature > 0.0)) throw std::invalid_argument("DickeParams: temperature must be > 0");
    if (n_atoms < 1) throw std::invalid_argument("DickeParams: n_atoms must be positive");
}

double phi_potential(double z, const DickeParams& p) {
    p.validate();
    const double beta = p.beta();
    return -beta * p.omega * z * z + ln_2cosh(0.5 * beta * xi_of(z, p));
}

double phi_second_derivative(double z, const DickeParams& p) {
    p.validate();
    const double beta = p.beta();
    const double g2 = p.gamma * p.gamma;
    const double xi = xi_of(z, p);
    const double t = std::tanh(0.5 * beta * xi);
    const double sech = 1.0 / std::cosh(0.5 * beta * xi);
    // d/dxi tanh(beta xi/2) = (beta/2) sech^2
    const double xtp_minus_t = 0.5 * beta * xi * sech * sech - t;
    return -2.0 * beta * p.omega + 8.0 * beta * g2 * t / xi +
           128.0 * beta * g2 * g2 * z * z * xtp_minus_t / (xi * xi * xi);
}

std::optional<double> critical_temperature(double epsilon, double omega, double gamma) {
    if (!(epsilon > 0.0) || !(omega > 0.0) || !(gamma >= 0.0)) {
        throw std::invalid_argument("critical_temperature: need epsilon, omega > 0 and gamma >= 0");
    }
    const double x = epsilon * omega / (4.0 * gamma * gamma);
    if (!(x < 1.0)) return std::nullopt;  // normal phase at all T > 0
    return epsilon / (2.0 * std::atanh(x));
}

DickePhasePoint saddle_point(const DickeParams& p) {
    p.validate();
    const auto tc = critical_temperature(p.epsilon, p.omega, p.gamma);
    if (!tc || p.temperature > *tc) {
        return {DickePhase::NP, 0.0, 1.0, p.epsilon};
    }
    const double eta_hi = 4.0 * p.gamma * p.gamma / (p.epsilon * p.omega);
    const double eta_lo = 1.0 + 1e-14;
    double eta = 1.0;
    if (eta_residual(eta_lo, p) < 0.0) {
        eta = num::find_root([&](double e) { return eta_residual(e, p); },
                             {eta_lo, eta_hi}, 1e-14);
    }
    // else: within roundoff of the critical line, eta = 1 and z0 = 0
    const double z0 = p.epsilon * std::sqrt(std::max(eta * eta - 1.0, 0.0)) / (4.0 * p.gamma);
    DickePhasePoint pt{DickePhase::SP, z0, eta, xi_of(z0, p)};
    if (phi_potential(pt.z0, p) < phi_potential(0.0, p)) {
        throw NoConvergence("saddle_point: z0 is not the global maximum of Phi");
    }
    return pt;
}

double log_partition(const DickeParams& p) {
    p.validate();
    const auto pt = saddle_point(p);
    const double d2 = phi_second_derivative(pt.z0, p);
    if (std::fabs(d2) < 1e-12) {
        throw DegenerateSaddle("log_partition: d2Phi(z0) vanishes at the critical line");
    }
    const double beta = p.beta();
    return p.n_atoms * phi_potential(pt.z0, p) +
           0.5 * std::log(2.0 / (beta * p.omega * std::fabs(d2)));
}

double log_partition_quadrature(const DickeParams& p) {
    p.validate();
    const auto pt = saddle_point(p);
    const double beta = p.beta();
    const double n = p.n_atoms;
    const double phi_max = phi_potential(pt.z0, p);
    const double half_width = 20.0 / std::sqrt(n * beta * p.omega);
    const double l = pt.z0 + half_width;

    const auto f = [&](double z) { return std::exp(n * (phi_potential(z, p) - phi_max)); };
    // Split at the maxima so no panel can straddle a peak unseen.
    constexpr double tol = 1e-10;
    double integral = 0.0;
    if (pt.z0 > 0.0) {
        integral += num::adaptive_quadrature(f, -l, -pt.z0, tol);
        integral += num::adaptive_quadrature(f, -pt.z0, 0.0, tol);
        integral += num::adaptive_quadrature(f, 0.0, pt.z0, tol);
        integral += num::adaptive_quadrature(f, pt.z0, l, tol);
    } else {
        integral += num::adaptive_quadrature(f, -l, 0.0, tol);
        integral += num::adaptive_quadrature(f, 0.0, l, tol);
    }
    return 0.5 * std::log(n / (M_PI * beta * p.omega)) + n * phi_max + std::log(integral);
}

double specific_heat_per_atom(const DickeParams& p) {
    p.validate();
    const auto pt = saddle_point(p);
    const double beta = p.beta();
    const double half_bxi = 0.5 * beta * pt.xi;
    const double sech = 1.0 / std::cosh(half_bxi);
    const double t = std::tanh(half_bxi);
    const double g2 = p.gamma * p.gamma;
    const double lead = 0.25 * beta * beta * p.epsilon * p.epsilon * sech;
    double bracket = 1.0;
    if (pt.label == DickePhase::NP) {
        bracket += 16.0 * g2 * g2 / (p.epsilon * p.epsilon * p.omega * p.omega) * t * t /
                   (1.0 - 2.0 * beta * g2 / p.omega * sech);
    }
    return lead * bracket;
}

double specific_heat_fd(const DickeParams& p) {
    p.validate();
    const double beta = p.beta();
    const auto ln_z = [&](double b) {
        DickeParams q = p;
        q.temperature = 1.0 / b;
        return log_partition(q);
    };
    const double d2 = num::central_derivative(ln_z, beta, 1e-4 * beta, 2);
    return beta * beta * d2 / p.n_atoms;
}

VMoments v_moments(const DickeParams& p) {
    p.validate();
    const auto pt = saddle_point(p);
    const double n = p.n_atoms;
    const double t = std::tanh(0.5 * p.beta() * pt.xi);
    const double c = p.gamma * pt.z0 * pt.z0 * t / pt.xi;
    VMoments m;
    m.v_mean = -4.0 * n * c;
    m.v_sq_mean = 16.0 * n * (n - 1.0) * c * c + n * pt.z0 * pt.z0;
    return m;
}

GaussianWorkLaw work_law(const DickeParams& p, const QuenchSpec& q) {
    const auto m = v_moments(p);
    GaussianWorkLaw law;
    law.mean = q.delta * m.v_mean;
    law.variance = std::max(0.0, q.delta * q.delta * (m.v_sq_mean - m.v_mean * m.v_mean));
    return law;
}

std::complex<double> characteristic_function(std::complex<double> u, const DickeParams& p,
                                             const QuenchSpec& q) {
    const auto law = work_law(p, q);
    const std::complex<double> i(0.0, 1.0);
    return std::exp(i * u * law.mean - 0.5 * u * u * law.variance);
}

double average_work(const DickeParams& p, const QuenchSpec& q) {
    return q.delta * v_moments(p).v_mean;
}

double jarzynski_ratio(const DickeParams& p, const QuenchSpec& q) {
    const auto law = work_law(p, q);
    const double beta = p.beta();
    const double ln_g_ib = -beta * law.mean + 0.5 * beta * beta * law.variance;
    DickeParams pf = p;
    pf.gamma = p.gamma + q.delta;
    return std::exp(ln_g_ib + log_partition(p) - log_partition(pf));
}

bool quench_in_linear_regime(const DickeParams& p, const QuenchSpec& q) {
    if (p.gamma == 0.0) return q.delta == 0.0;
    return std::fabs(q.delta) / p.gamma <= 0.1;
}

} // namespace quenchcrit::dicke
