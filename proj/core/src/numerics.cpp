#include "quenchcrit/numerics.hpp"

#include <lapacke.h>

#include <cmath>
#include <sstream>

namespace quenchcrit::num {

namespace {

constexpr int kRootIterCap = 200;
constexpr int kQuadDepthCap = 60;

std::string bracket_str(double lo, double hi) {
    std::ostringstream os;
    os << "[" << lo << ", " << hi << "]";
    return os.str();
}

} // namespace

double find_root(const std::function<double(double)>& f, Bracket b, double tol) {
    if (!(b.lo < b.hi) || !(tol > 0.0)) {
        throw InvalidBracket("find_root: need lo < hi and tol > 0, got " +
                             bracket_str(b.lo, b.hi));
    }
    double a = b.lo, c = b.hi;
    double fa = f(a), fc = f(c);
    if (fa == 0.0) return a;
    if (fc == 0.0) return c;
    if ((fa > 0.0) == (fc > 0.0)) {
        throw InvalidBracket("find_root: no sign change on " + bracket_str(b.lo, b.hi));
    }

    // Brent's zeroin: x2 tracks the best estimate, x1 the previous one,
    // x0 the contrapoint with f of opposite sign.
    double x0 = a, x1 = c, x2 = c;
    double f0 = fa, f1 = fc, f2 = fc;
    double d = 0.0, e = 0.0;
    for (int iter = 0; iter < kRootIterCap; ++iter) {
        if ((f2 > 0.0) == (f0 > 0.0)) {
            x0 = x1;
            f0 = f1;
            e = d = x2 - x1;
        }
        if (std::fabs(f0) < std::fabs(f2)) {
            x1 = x2; x2 = x0; x0 = x1;
            f1 = f2; f2 = f0; f0 = f1;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(x2) +
                            0.5 * tol;
        const double xm = 0.5 * (x0 - x2);
        if (std::fabs(xm) <= tol1 || f2 == 0.0) return x2;
        if (std::fabs(e) >= tol1 && std::fabs(f1) > std::fabs(f2)) {
            // secant / inverse quadratic step
            double p, q;
            const double s = f2 / f1;
            if (x1 == x0) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = f1 / f0;
                const double r = f2 / f0;
                p = s * (2.0 * xm * qq * (qq - r) - (x2 - x1) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        x1 = x2;
        f1 = f2;
        x2 += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        f2 = f(x2);
    }
    throw NoConvergence("find_root: iteration cap reached, last bracket " +
                        bracket_str(std::min(x0, x2), std::max(x0, x2)));
}

double central_derivative(const std::function<double(double)>& f, double x, double h,
                          int order) {
    if (!(h > 0.0)) throw std::invalid_argument("central_derivative: h must be > 0");
    switch (order) {
        case 1:
            return (f(x + h) - f(x - h)) / (2.0 * h);
        case 2:
            return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        default:
            throw std::invalid_argument("central_derivative: order must be 1 or 2");
    }
}

namespace {

double simpson_recurse(const std::function<double(double)>& f, double a, double b, double fa,
                       double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;  // Richardson correction
    }
    if (depth <= 0) {
        throw NoConvergence("adaptive_quadrature: refinement budget exhausted");
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_quadrature(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
    if (!(lo < hi)) throw std::invalid_argument("adaptive_quadrature: need lo < hi");
    if (!(tol > 0.0)) throw std::invalid_argument("adaptive_quadrature: need tol > 0");
    const double fa = f(lo);
    const double fb = f(hi);
    const double fm = f(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_recurse(f, lo, hi, fa, fm, fb, whole, tol, kQuadDepthCap);
}

SpectralDecomposition eigh(const Eigen::MatrixXd& h) {
    if (h.rows() != h.cols()) throw NotSymmetric("eigh: matrix is not square");
    const int n = static_cast<int>(h.rows());
    if (n == 0) throw NotSymmetric("eigh: empty matrix");

    const double scale = h.cwiseAbs().maxCoeff();
    const double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale) {
        throw NotSymmetric("eigh: asymmetry " + std::to_string(asym) + " exceeds tolerance");
    }

    SpectralDecomposition out;
    out.dim = n;
    out.eigenvectors = h;  // overwritten in place by LAPACK
    out.eigenvalues.resize(n);
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.eigenvectors.data(), n,
                       out.eigenvalues.data());
    if (info > 0) throw NoConvergence("eigh: dsyevd failed to converge (info=" +
                                      std::to_string(info) + ")");
    if (info < 0) throw std::invalid_argument("eigh: bad argument to dsyevd");
    return out;
}

} // namespace quenchcrit::num
