#ifndef NLGS_SPHERE_HPP
#define NLGS_SPHERE_HPP

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "nlgs/grid.hpp"

namespace nlgs {

using Vec3 = std::array<double, 3>;
using SpherePoint = std::array<double, 4>;  // unit vector in R^4

// S(x) = (2x, 1 - |x|^2) / (1 + |x|^2); unit norm by construction.
SpherePoint stereographic(const Vec3& x);

// J(x) = (2 / (1 + |x|^2))^3
double stereographic_jacobian(const Vec3& x);

// lhs = |S(x) - S(y)|^2, rhs = J(x)^{1/3} |x - y|^2 J(y)^{1/3}; the cube-root
// conformal factors are what make the two sides match dimensionally.
std::pair<double, double> conformal_identity_check(const Vec3& x, const Vec3& y);

// Zonal reduction of the kernel (2 pi^2)^{-1} |w - eta|^{-2}: a degree and
// the kernel profile as a function of cos(gamma).
struct ZonalSpec {
    int degree = 0;  // >= 0

    static double kernel_profile(double cos_gamma) {
        return 1.0 / (2.0 * M_PI * M_PI) / (2.0 - 2.0 * cos_gamma);
    }
};

// Zonal eigenvalue of that kernel on degree-l spherical harmonics of S^3 via
// the one-dimensional reduction
//   (2/pi) (l+1)^{-1} int_0^pi cos^2(gamma/2) U_l(cos gamma) dgamma,
// which evaluates to 1/(l+1).
double funk_hecke_eigenvalue(int l);

// Dimension (l+1)^2 of the degree-l spherical harmonics on S^3.
int harmonic_dim(int l);

// Chebyshev polynomial of the second kind (the zonal harmonics of S^3),
// normalized by U_l(1) = l + 1; three-term recurrence.
double chebyshev_u(int l, double x);

struct BsSpectrum {
    std::vector<double> eigenvalues;  // n_top largest, descending
    std::vector<int> parities;        // +1 even, -1 odd eigenvector
};

// Largest eigenvalues of the dense symmetric matrix of
// h^{1/2} (T + 2/pi)^{-1} h^{1/2} with h = sech sampled on the grid; the
// radial-subspace realization of the Birman-Schwinger operator. Expected
// spectrum {1/(l+1)}, simple, with eigenvector parity (-1)^l. n_top <= 12.
BsSpectrum bs_radial_eigenvalues(int n_top, const GridSpec& grid);
BsSpectrum bs_radial_eigenvalues(int n_top);  // default spectral grid

struct TransportReport {
    double max_rel_error = 0.0;  // sup over the sweep, relative to sup |rhs|
    int samples = 0;
};

// Pointwise identity (R + r R')(r) = Q'(ln r)/r for R(r) = sech(ln r)/r,
// checked on a log-spaced sweep of r in [0.05, 20] with a high-order finite
// difference against the closed-form right side.
TransportReport kernel_transport_check();

}  // namespace nlgs

#endif
