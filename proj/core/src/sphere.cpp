#include "nlgs/sphere.hpp"

#include <cmath>
#include <stdexcept>

#include "nlgs/lapack.hpp"
#include "nlgs/multiplier.hpp"
#include "nlgs/quadrature.hpp"
#include "nlgs/spectral.hpp"

namespace nlgs {

namespace {

double norm2(const Vec3& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2]; }

}  // namespace

SpherePoint stereographic(const Vec3& x) {
    const double d = 1.0 + norm2(x);
    return {2.0 * x[0] / d, 2.0 * x[1] / d, 2.0 * x[2] / d, (1.0 - norm2(x)) / d};
}

double stereographic_jacobian(const Vec3& x) {
    const double q = 2.0 / (1.0 + norm2(x));
    return q * q * q;
}

std::pair<double, double> conformal_identity_check(const Vec3& x, const Vec3& y) {
    const SpherePoint sx = stereographic(x), sy = stereographic(y);
    double lhs = 0.0;
    for (int i = 0; i < 4; ++i) lhs += (sx[i] - sy[i]) * (sx[i] - sy[i]);
    double dist2 = 0.0;
    for (int i = 0; i < 3; ++i) dist2 += (x[i] - y[i]) * (x[i] - y[i]);
    const double rhs = std::cbrt(stereographic_jacobian(x)) * dist2 * std::cbrt(stereographic_jacobian(y));
    return {lhs, rhs};
}

double chebyshev_u(int l, double x) {
    if (l < 0) throw std::invalid_argument("chebyshev_u: degree must be >= 0");
    double prev = 0.0, cur = 1.0;
    for (int k = 0; k < l; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double funk_hecke_eigenvalue(int l) {
    if (l < 0) throw std::invalid_argument("funk_hecke_eigenvalue: l must be >= 0");
    // the raw kernel 1/(2 - 2 cos gamma) is singular at 0, but against the
    // S^3 surface measure the zonal reduction sin^2(gamma)/(2 - 2 cos gamma)
    // = cos^2(gamma/2) is analytic
    const GaussLegendre gl(2000);
    const double integral = gl.integrate(0.0, M_PI, [l](double gamma) {
        const double c = std::cos(0.5 * gamma);
        return c * c * chebyshev_u(l, std::cos(gamma));
    });
    return (2.0 / M_PI) / (l + 1) * integral;
}

int harmonic_dim(int l) {
    if (l < 0) throw std::invalid_argument("harmonic_dim: l must be >= 0");
    return (l + 1) * (l + 1);
}

BsSpectrum bs_radial_eigenvalues(int n_top, const GridSpec& grid) {
    if (n_top < 1 || n_top > 12)
        throw std::invalid_argument("bs_radial_eigenvalues: n_top must lie in 1..12");
    const int n = grid.num_points;
    const FourierMultiplier resolvent{
        [](double tau) { return 1.0 / (ilw_symbol(tau) + 2.0 / M_PI); }, "(T + 2/pi)^{-1}"};
    const std::vector<double> gen = circulant_generator(resolvent, grid);
    std::vector<double> sqrt_h(n);
    for (int j = 0; j < n; ++j) sqrt_h[j] = std::sqrt(1.0 / std::cosh(grid.node(j)));

    std::vector<double> B(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            B[static_cast<size_t>(i) * n + j] = sqrt_h[i] * gen[(i - j + n) % n] * sqrt_h[j];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double avg =
                0.5 * (B[static_cast<size_t>(i) * n + j] + B[static_cast<size_t>(j) * n + i]);
            B[static_cast<size_t>(i) * n + j] = avg;
            B[static_cast<size_t>(j) * n + i] = avg;
        }

    std::vector<double> vectors;
    const std::vector<double> w = symmetric_eigenvalues(B, n, &vectors);

    BsSpectrum out;
    for (int m = 0; m < n_top; ++m) {
        const int idx = n - 1 - m;  // ascending order -> take from the top
        out.eigenvalues.push_back(w[idx]);
        double even_defect = 0.0, odd_defect = 0.0;
        for (int j = 0; j < n; ++j) {
            const double v = vectors[static_cast<size_t>(j) * n + idx];
            const double vm = vectors[static_cast<size_t>(((n - j) % n)) * n + idx];
            even_defect = std::max(even_defect, std::abs(v - vm));
            odd_defect = std::max(odd_defect, std::abs(v + vm));
        }
        out.parities.push_back(even_defect <= odd_defect ? +1 : -1);
    }
    return out;
}

BsSpectrum bs_radial_eigenvalues(int n_top) { return bs_radial_eigenvalues(n_top, spectral_grid()); }

TransportReport kernel_transport_check() {
    // rho(u) = R(e^u) e^u... precisely: R(r) = sech(ln r)/r, and with u = ln r
    // one has (R + r R')(r) = rho(u) + rho'(u) for rho(u) = sech(u) e^{-u}.
    auto rho = [](double u) { return std::exp(-u) / std::cosh(u); };
    auto rhs = [](double u) {
        const double s = 1.0 / std::cosh(u);
        return -s * std::tanh(u) * std::exp(-u);  // sech'(ln r)/r at r = e^u
    };
    // 8th-order central difference with one Richardson step
    auto fd8 = [&rho](double u, double d) {
        static const double a1 = 4.0 / 5.0, a2 = -1.0 / 5.0, a3 = 4.0 / 105.0, a4 = -1.0 / 280.0;
        return (a1 * (rho(u + d) - rho(u - d)) + a2 * (rho(u + 2 * d) - rho(u - 2 * d)) +
                a3 * (rho(u + 3 * d) - rho(u - 3 * d)) + a4 * (rho(u + 4 * d) - rho(u - 4 * d))) / d;
    };

    TransportReport rep;
    const int samples = 400;
    const double r_lo = 0.05, r_hi = 20.0;
    double sup_rhs = 0.0;
    std::vector<double> gaps;
    for (int i = 0; i <= samples; ++i) {
        const double r = r_lo * std::pow(r_hi / r_lo, static_cast<double>(i) / samples);
        const double u = std::log(r);
        const double d = 0.05;
        const double coarse = fd8(u, d), fine = fd8(u, 0.5 * d);
        const double drho = (256.0 * fine - coarse) / 255.0;  // Richardson to 10th order
        const double lhs = rho(u) + drho;
        const double right = rhs(u);
        gaps.push_back(std::abs(lhs - right));
        sup_rhs = std::max(sup_rhs, std::abs(right));
    }
    for (double g : gaps) rep.max_rel_error = std::max(rep.max_rel_error, g / sup_rhs);
    rep.samples = samples + 1;
    return rep;
}

}  // namespace nlgs
