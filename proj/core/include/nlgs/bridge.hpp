#ifndef NLGS_BRIDGE_HPP
#define NLGS_BRIDGE_HPP

#include <utility>
#include <vector>

#include "nlgs/grid.hpp"

namespace nlgs {

// Radial 3D function represented through its 1D partner:
//   psi(x) = |x|^{-1} phi(ln |x|).
// Evaluation interpolates the partner samples (12-point local polynomial,
// exact at grid nodes), and returns 0 once ln r leaves the grid.
struct RadialProfile3D {
    Profile partner;

    double operator()(double r) const;  // psi(r), r > 0
};

RadialProfile3D lift(const Profile& phi);

// Three independent routes to (psi, sqrt(-Delta) psi) for psi = lift(phi).

// 4*pi * sum_k tau coth(pi tau/2) |phi_hat|^2 (pi/L)  -- the full symbol,
// i.e. the ILW symbol plus 2/pi.
double form_via_symbol(const Profile& phi);

struct SinhFormResult {
    double value = 0.0;
    double band_fraction = 0.0;  // diagonal-band share of the double integral
    bool band_ok = true;         // false if the band exceeds 10% of the total
};
// 2 * iint |phi(t)-phi(u)|^2 / sinh^2(t-u) dt du + 8 ||phi||_2^2 by tensor
// quadrature on a trig-refined grid; the diagonal band |t-u| < 4h is replaced
// by its finite limit |phi'((t+u)/2)|^2 ((t-u)/sinh(t-u))^2. The replacement
// misses an O(band-width^3) cross term, so the default refinement keeps the
// band a fraction of the input spacing.
SinhFormResult form_via_sinh(const Profile& phi, int refinement = 6);

struct HankelFormResult {
    double value = 0.0;
    double tail_bound = 0.0;  // recorded bound for the truncated radial tail
    bool tail_ok = true;      // false if the bound exceeds 1e-6 of the value
};
// Radial sine-transform route: psi_hat via oscillation-exact panel quadrature
// of int_0^inf sin(kr) r psi(r) dr, then 4*pi int_0^inf k^3 |psi_hat|^2 dk.
HankelFormResult form_via_hankel(const Profile& phi);

// (quadrature, closed) for int_R sin^2(tau t/2)/sinh^2 t dt
// = (pi tau/2) coth(pi tau/2) - 1.
std::pair<double, double> gr_identity_check(double tau);

// (quadrature, closed) for 2*pi int_{-1}^{1} (r^2 - 2 r s t + s^2)^{-2} dt
// = 4*pi/(r^2 - s^2)^2; rejects |r - s_r| < 1e-6.
std::pair<double, double> angular_reduction_check(double r, double s_r);

struct WeightMapReport {
    double psi_l3_cubed = 0.0;   // ||psi||_3^3 computed radially
    double hardy_form = 0.0;     // (psi, |x|^{-1} psi) computed radially
    double phi_l3_cubed = 0.0;   // ||phi||_3^3
    double phi_l2_squared = 0.0; // ||phi||_2^2
    bool identities_ok = true;   // 4*pi factors match within tolerance
};
WeightMapReport weight_maps(const Profile& phi);

// For psi(x) = |x|^{-1/2} phi(ln |x|) with compactly supported phi:
// (lhs, rhs) = (int |grad psi|^2 dx, 4*pi (||phi'||_2^2 + ||phi||_2^2 / 4)),
// the lhs from finite differences, the rhs from the spectral derivative.
std::pair<double, double> h1_analogue_check(const Profile& phi);

// Canonical agreement suite for the three form routes: sech, the unit
// Gaussian, and eight fixed Gaussians whose widths and centers keep the
// radial frequency content inside the hankel route's k-window.
std::vector<Profile> bridge_form_suite(const GridSpec& grid);

}  // namespace nlgs

#endif
